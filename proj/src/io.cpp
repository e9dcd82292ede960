#include "hyperlap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "hyperlap/error.hpp"

namespace hyperlap::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  return j.get<long long>();
}

std::size_t count(const Json& j, const std::string& what) {
  const long long v = integer(j, what);
  if (v < 0) malformed(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

Json one_based(const Edge& e) {
  Json out = Json::array();
  for (Vertex v : e) out.push_back(std::size_t{v} + 1);
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const UniformHypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(one_based(e));
  return Json{{"k", h.k()}, {"n", h.n()}, {"edges", std::move(edges)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({std::size_t{a} + 1, std::size_t{b} + 1}));
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Json to_json(const DenseVector& x) { return Json{{"x", x}}; }

Json to_json(const EigenPair& p) {
  return Json{{"lambda", p.lambda}, {"residual", p.residual}, {"kind", to_string(p.kind)}, {"x", p.x}};
}

Json to_json(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Hyperstar& f) { return Json{{"name", "hyperstar"}, {"k", f.k}, {"d", f.d}}; },
                        [](const Hypercycle& f) { return Json{{"name", "hypercycle"}, {"k", f.k}, {"s", f.s}}; },
                        [](const Hyperpath& f) { return Json{{"name", "hyperpath"}, {"k", f.k}, {"d", f.d}}; },
                        [](const Sunflower& f) { return Json{{"name", "sunflower"}, {"k", f.k}}; },
                        [](const PowerOf& f) { return Json{{"name", "power"}, {"k", f.k}, {"base", to_json(f.base)}}; },
                        [](const Complete& f) { return Json{{"name", "complete"}, {"k", f.k}, {"n", f.n}}; },
                    },
                    spec);
}

Json to_json(const SpectrumReport& report) {
  Json family = report.family ? to_json(*report.family) : Json::object();
  family["text"] = report.family_text;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"lambda", e.lambda},
                           {"case", e.case_tag},
                           {"certified", e.certified},
                           {"witness", e.witness ? to_json(*e.witness) : Json(nullptr)}});
  }
  Json out{{"family", std::move(family)},
           {"k", report.k},
           {"max_degree", report.max_degree},
           {"method", report.method},
           {"entries", std::move(entries)}};
  if (!report.candidates.empty()) {
    Json cands = Json::array();
    for (const auto& c : report.candidates)
      cands.push_back(Json{{"variant", c.variant}, {"lambda", c.lambda}, {"certified", c.certified}});
    out["candidates"] = std::move(cands);
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

Json to_json(const std::vector<OracleFinding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings) {
    out.push_back(
        Json{{"lambda", f.lambda}, {"residual", f.residual}, {"basin_count", f.basin_count}, {"x", f.x}});
  }
  return out;
}

Json to_json(const SpectrumDiff& diff) {
  Json matched = Json::array();
  for (const auto& [a, b] : diff.matched) matched.push_back(Json{{"catalog", a}, {"oracle", b}});
  return Json{{"status", to_string(diff.status)},
              {"matched", std::move(matched)},
              {"catalog_only", diff.catalog_only},
              {"oracle_only", diff.oracle_only}};
}

Json to_json(const MonotonicityResult& r) {
  return Json{{"family", to_string(r.family)},
              {"parameter", r.parameter},
              {"k", r.ks},
              {"lambda_q", r.lambda_q},
              {"lambda_l", r.lambda_l},
              {"iteration", r.iteration},
              {"min_gap", r.min_gap},
              {"strictly_decreasing", r.strictly_decreasing},
              {"above_degree", r.above_degree},
              {"cross_checked", r.cross_checked}};
}

UniformHypergraph hypergraph_from_json(const Json& j) {
  const long long k = integer(field(j, "k"), "k");
  if (k < 0 || k > 1'000) malformed("k out of range");
  const std::size_t n = count(field(j, "n"), "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("edges must be an array");
  std::vector<std::vector<long long>> raw;
  raw.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array()) malformed("each edge must be an array of vertex identifiers");
    std::vector<long long> ids;
    for (const auto& v : e) ids.push_back(integer(v, "vertex identifier"));
    raw.push_back(std::move(ids));
  }
  return UniformHypergraph::from_one_based(static_cast<unsigned>(k), n, raw);
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n"), "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("edges must be an array");
  std::vector<std::pair<long long, long long>> raw;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each graph edge must be a pair");
    raw.emplace_back(integer(e[0], "vertex identifier"), integer(e[1], "vertex identifier"));
  }
  return Graph::from_one_based(n, raw);
}

DenseVector vector_from_json(const Json& j) {
  const Json& x = field(j, "x");
  if (!x.is_array()) malformed("x must be an array");
  DenseVector out;
  out.reserve(x.size());
  for (const auto& v : x) {
    if (!v.is_number()) malformed("vector entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": invalid JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

namespace {
template <class F>
auto with_source(const std::filesystem::path& path, F&& f) {
  const Json j = read_json_file(path);
  try {
    return f(j);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}
}  // namespace

UniformHypergraph load_hypergraph(const std::filesystem::path& path) {
  return with_source(path, [](const Json& j) { return hypergraph_from_json(j); });
}

Graph load_graph(const std::filesystem::path& path) {
  return with_source(path, [](const Json& j) { return graph_from_json(j); });
}

DenseVector load_vector(const std::filesystem::path& path) {
  return with_source(path, [](const Json& j) { return vector_from_json(j); });
}

std::string spectrum_csv(const SpectrumReport& report) {
  std::string out = "lambda,case,certified\n";
  for (const auto& e : report.entries) {
    out += format_double(e.lambda) + "," + csv_quote(e.case_tag) + "," + (e.certified ? "true" : "false") + "\n";
  }
  return out;
}

std::string monotonicity_csv(const MonotonicityResult& r) {
  std::string out = "k,lambda_q,lambda_l,iteration\n";
  for (std::size_t i = 0; i < r.ks.size(); ++i) {
    out += std::to_string(r.ks[i]) + "," + format_double(r.lambda_q[i]) + "," + format_double(r.lambda_l[i]) + "," +
           format_double(r.iteration[i]) + "\n";
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, tmp.string() + ": cannot write");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::ParseError, tmp.string() + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::ParseError, path.string() + ": cannot replace file");
  }
}

}  // namespace hyperlap::io
