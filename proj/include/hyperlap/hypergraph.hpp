#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperlap {

// Vertices are 0-based in memory; files and the CLI use 1-based identifiers.
using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Simple undirected k-uniform hypergraph with k >= 3 and at least one edge.
///
/// Construction validates and sorts the vertices of each edge; the edge order
/// given by the caller is kept (generators rely on it for their canonical
/// numbering). Instances are immutable.
class UniformHypergraph {
 public:
  UniformHypergraph(unsigned k, std::size_t n, std::vector<Edge> edges);

  /// Builds from 1-based vertex identifiers, as used in files and examples.
  static UniformHypergraph from_one_based(unsigned k, std::size_t n,
                                          const std::vector<std::vector<long long>>& edges);

  unsigned k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::size_t degree(Vertex v) const { return degree_.at(v); }
  const std::vector<std::size_t>& degree_vector() const noexcept { return degree_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Same hypergraph with the edge list sorted lexicographically.
  UniformHypergraph canonical() const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  unsigned k_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::size_t max_degree_ = 0;
};

/// Throws Error unless (k, n, edges) describe a valid hypergraph. Edges may be
/// unsorted; vertices are 0-based.
void validate(unsigned k, std::size_t n, const std::vector<Edge>& edges);

/// Ordinary simple graph, the base of a power hypergraph.
class Graph {
 public:
  Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);
  static Graph from_one_based(std::size_t n, const std::vector<std::pair<long long, long long>>& edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  Graph canonical() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // each pair stored (min, max)
};

struct DegreeProfile {
  std::vector<std::size_t> degree;
  std::size_t max_degree = 0;
};

struct Partition {
  std::vector<Vertex> part1;  // meets every edge in an odd number of vertices
  std::vector<Vertex> part2;
};

// Family descriptors. Vertex counts: hyperstar d(k-1)+1, hypercycle s(k-1),
// hyperpath d(k-1)+1, sunflower (k-1)k+1, power n_g+(k-2)|E_g|.
struct Hyperstar { unsigned k; std::size_t d; };
struct Hypercycle { unsigned k; std::size_t s; };
struct Hyperpath { unsigned k; std::size_t d; };
struct Sunflower { unsigned k; };
struct PowerOf { Graph base; unsigned k; };
struct Complete { unsigned k; std::size_t n; };

using FamilySpec = std::variant<Hyperstar, Hypercycle, Hyperpath, Sunflower, PowerOf, Complete>;

std::string family_name(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);
void validate(const FamilySpec& spec);

UniformHypergraph generate(const FamilySpec& spec);
UniformHypergraph kth_power(const Graph& g, unsigned k);

/// Recognizes the canonical generator output (up to edge order) of the
/// hyperstar, hypercycle, hyperpath, sunflower and complete families.
std::optional<FamilySpec> identify_family(const UniformHypergraph& h);

DegreeProfile degrees(const UniformHypergraph& h);
bool is_connected(const UniformHypergraph& h);

/// For each edge, its smallest degree-1 vertex; absent unless every edge has one.
std::optional<std::vector<Vertex>> cored_structure(const UniformHypergraph& h);

/// True when every edge has at most two vertices of degree >= 2, which is the
/// shape of a power hypergraph (the base multigraph may have parallel edges,
/// as in the size-2 hypercycle).
bool has_power_shape(const UniformHypergraph& h);

/// Odd-bipartition by elimination over GF(2); requires even k.
std::optional<Partition> odd_bipartition(const UniformHypergraph& h);

/// True when every edge meets `part1` in an odd number of vertices and both
/// parts are nonempty and cover the vertex set.
bool is_odd_bipartition(const UniformHypergraph& h, const Partition& p);

}  // namespace hyperlap
