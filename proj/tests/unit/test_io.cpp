#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hyperlap/error.hpp"
#include "hyperlap/io.hpp"

namespace hyperlap {
namespace {

namespace fs = std::filesystem;

ErrorCode parse_code(const std::string& text) {
  try {
    io::hypergraph_from_json(io::parse_json(text, "input"));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ZeroVector;
}

TEST(Json, HypergraphRoundTrip) {
  for (const auto& spec : std::vector<FamilySpec>{Hyperstar{3, 2}, Hypercycle{4, 3}, Sunflower{5}, Complete{4, 5}}) {
    const auto h = generate(spec);
    const auto j = io::to_json(h);
    EXPECT_EQ(io::hypergraph_from_json(j), h);
    EXPECT_EQ(io::to_json(io::hypergraph_from_json(io::parse_json(j.dump(), "x"))).dump(), j.dump());
  }
}

TEST(Json, OneBasedIdentifiers) {
  const auto j = io::to_json(generate(Hyperstar{3, 2}));
  EXPECT_EQ(j.dump(), R"({"k":3,"n":5,"edges":[[1,2,3],[1,4,5]]})");
}

TEST(Json, MalformedInputs) {
  EXPECT_EQ(parse_code("{\"k\": 3, \"n\": 3, \"edges\": [[1,2,3]"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"k\": 3, \"edges\": [[1,2,3]]}"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"k\": 3, \"n\": 3, \"edges\": [[1,2,\"x\"]]}"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"k\": 3, \"n\": -1, \"edges\": []}"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"k\": 3, \"n\": 3, \"edges\": [[1,2,4]]}"), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(parse_code("{\"k\": 3, \"n\": 3, \"edges\": [[1,2]]}"), ErrorCode::NonUniformEdge);
}

TEST(Json, ParseErrorReportsLineAndColumn) {
  try {
    io::parse_json("{\n  \"k\": 3,\n  \"n\": ,\n}", "h.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("h.json:3:"), std::string::npos) << e.what();
  }
}

TEST(Json, GraphAndVector) {
  const Graph g = io::graph_from_json(io::parse_json(R"({"n": 3, "edges": [[1,2],[2,3]]})", "g"));
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
  const auto x = io::vector_from_json(io::parse_json(R"({"x": [1, -0.5, 2e-3]})", "v"));
  EXPECT_EQ(x, (DenseVector{1, -0.5, 2e-3}));
  EXPECT_THROW(io::vector_from_json(io::parse_json(R"({"x": [1, null]})", "v")), Error);
}

TEST(Csv, SeventeenDigitsRoundTrip) {
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(io::format_double(v)), v);
  SpectrumReport r;
  r.add(make_entry(v, "tag, with comma", std::nullopt, 1e-9));
  EXPECT_EQ(io::spectrum_csv(r), "lambda,case,certified\n0.30000000000000004,\"tag, with comma\",false\n");
}

TEST(Files, AtomicWriteAndLoad) {
  const fs::path dir = fs::temp_directory_path() / "hyperlap_io_test";
  fs::create_directories(dir);
  const fs::path p = dir / "h.json";
  io::write_file_atomic(p, io::to_json(generate(Hypercycle{3, 3})).dump());
  io::write_file_atomic(p, io::to_json(generate(Hyperstar{3, 2})).dump());
  EXPECT_EQ(io::load_hypergraph(p), generate(Hyperstar{3, 2}));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  try {
    io::load_hypergraph(dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  fs::remove_all(dir);
}

}  // namespace
}  // namespace hyperlap
