#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperlap/family_spectra.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/oracle.hpp"
#include "hyperlap/spectrum.hpp"
#include "hyperlap/tensor_ops.hpp"

namespace hyperlap::io {

using Json = nlohmann::ordered_json;

// Files use 1-based vertex identifiers.
// hypergraph: {"k": int, "n": int, "edges": [[int, ...], ...]}
// graph:      {"n": int, "edges": [[int, int], ...]}
// vector:     {"x": [float, ...]}

Json to_json(const UniformHypergraph& h);
Json to_json(const Graph& g);
Json to_json(const DenseVector& x);
Json to_json(const EigenPair& p);
Json to_json(const FamilySpec& spec);
Json to_json(const SpectrumReport& report);
Json to_json(const std::vector<OracleFinding>& findings);
Json to_json(const SpectrumDiff& diff);
Json to_json(const MonotonicityResult& result);

UniformHypergraph hypergraph_from_json(const Json& j);
Graph graph_from_json(const Json& j);
DenseVector vector_from_json(const Json& j);

/// Parses text as JSON; syntax errors become Error(ParseError) naming the
/// line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);

UniformHypergraph load_hypergraph(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);
DenseVector load_vector(const std::filesystem::path& path);

/// Columns lambda,case,certified; 17 significant digits.
std::string spectrum_csv(const SpectrumReport& report);
/// Columns k,lambda_q,lambda_l,iteration.
std::string monotonicity_csv(const MonotonicityResult& result);

/// printf %.17g, which reads back to the same double.
std::string format_double(double v);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hyperlap::io
