#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperlap/error.hpp"

namespace hyperlap {

namespace {

std::string edge_text(const Edge& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i] + 1;
  os << '}';
  return os.str();
}

Vertex checked_vertex(long long id, std::size_t n) {
  if (id < 1 || static_cast<unsigned long long>(id) > n) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(id) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

}  // namespace

void validate(unsigned k, std::size_t n, const std::vector<Edge>& edges) {
  if (k < 3) {
    throw Error(ErrorCode::InvalidUniformity, "uniformity must be at least 3, got " + std::to_string(k));
  }
  if (edges.empty()) throw Error(ErrorCode::TrivialHypergraph, "hypergraph has no edges");

  std::set<Edge> seen;
  for (const auto& raw : edges) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    for (Vertex v : e) {
      if (v >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(std::size_t{v} + 1) + " outside 1.." + std::to_string(n));
      }
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end() || e.size() != k) {
      throw Error(ErrorCode::NonUniformEdge,
                  "edge " + edge_text(e) + " does not have " + std::to_string(k) + " distinct vertices");
    }
    if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(e) + " repeated");
  }
}

UniformHypergraph::UniformHypergraph(unsigned k, std::size_t n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  validate(k_, n_, edges_);
  for (auto& e : edges_) std::sort(e.begin(), e.end());
  degree_.assign(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++degree_[v];
  max_degree_ = *std::max_element(degree_.begin(), degree_.end());
}

UniformHypergraph UniformHypergraph::from_one_based(unsigned k, std::size_t n,
                                                    const std::vector<std::vector<long long>>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& e : edges) {
    Edge c;
    c.reserve(e.size());
    for (long long id : e) c.push_back(checked_vertex(id, n));
    converted.push_back(std::move(c));
  }
  return UniformHypergraph(k, n, std::move(converted));
}

UniformHypergraph UniformHypergraph::canonical() const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return UniformHypergraph(k_, n_, std::move(sorted));
}

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), edges_(std::move(edges)) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto& [a, b] : edges_) {
    if (a >= n_ || b >= n_) throw Error(ErrorCode::VertexOutOfRange, "graph vertex outside 1.." + std::to_string(n_));
    if (a == b) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(std::size_t{a} + 1));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw Error(ErrorCode::InvalidGraph, "repeated graph edge {" + std::to_string(std::size_t{a} + 1) + "," +
                                               std::to_string(std::size_t{b} + 1) + "}");
    }
  }
}

Graph Graph::from_one_based(std::size_t n, const std::vector<std::pair<long long, long long>>& edges) {
  std::vector<std::pair<Vertex, Vertex>> converted;
  converted.reserve(edges.size());
  for (const auto& [a, b] : edges) converted.emplace_back(checked_vertex(a, n), checked_vertex(b, n));
  return Graph(n, std::move(converted));
}

Graph Graph::canonical() const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return Graph(n_, std::move(sorted));
}

DegreeProfile degrees(const UniformHypergraph& h) {
  return DegreeProfile{h.degree_vector(), h.max_degree()};
}

bool is_connected(const UniformHypergraph& h) {
  std::vector<Vertex> parent(h.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = h.n();
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      Vertex a = find(e[0]);
      Vertex b = find(e[i]);
      if (a != b) {
        parent[b] = a;
        --components;
      }
    }
  }
  return components == 1;
}

std::optional<std::vector<Vertex>> cored_structure(const UniformHypergraph& h) {
  std::vector<Vertex> cored;
  cored.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    auto it = std::find_if(e.begin(), e.end(), [&](Vertex v) { return h.degree(v) == 1; });
    if (it == e.end()) return std::nullopt;
    cored.push_back(*it);
  }
  return cored;
}

bool has_power_shape(const UniformHypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::count_if(e.begin(), e.end(), [&](Vertex v) { return h.degree(v) >= 2; }) <= 2;
  });
}

}  // namespace hyperlap
