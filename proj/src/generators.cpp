#include <algorithm>
#include <sstream>

#include "hyperlap/error.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidFamilyParameter, what);
}

void require_uniformity(unsigned k) { require(k >= 3, "uniformity k must be at least 3"); }

constexpr std::size_t kMaxCompleteEdges = 1'000'000;

std::size_t binomial_capped(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  long double value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    value = value * static_cast<long double>(n - r + i) / static_cast<long double>(i);
    if (value > kMaxCompleteEdges) return kMaxCompleteEdges + 1;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

UniformHypergraph make_hyperstar(unsigned k, std::size_t d) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    Edge e{0};
    for (unsigned t = 0; t + 1 < k; ++t) e.push_back(static_cast<Vertex>(1 + i * (k - 1) + t));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, d * (k - 1) + 1, std::move(edges));
}

UniformHypergraph make_hypercycle(unsigned k, std::size_t s) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < s; ++j) {
    Edge e;
    for (unsigned t = 0; t + 1 < k; ++t) e.push_back(static_cast<Vertex>(j * (k - 1) + t));
    e.push_back(static_cast<Vertex>(((j + 1) % s) * (k - 1)));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, s * (k - 1), std::move(edges));
}

UniformHypergraph make_hyperpath(unsigned k, std::size_t d) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < d; ++j) {
    Edge e;
    for (unsigned t = 0; t < k; ++t) e.push_back(static_cast<Vertex>(j * (k - 1) + t));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, d * (k - 1) + 1, std::move(edges));
}

UniformHypergraph make_sunflower(unsigned k) {
  std::vector<Edge> edges;
  Edge center;
  for (unsigned j = 0; j + 1 < k; ++j) {
    Edge petal;
    for (unsigned t = 0; t < k; ++t) petal.push_back(static_cast<Vertex>(j * k + t));
    center.push_back(static_cast<Vertex>(j * k));
    edges.push_back(std::move(petal));
  }
  center.push_back(static_cast<Vertex>((k - 1) * k));
  edges.push_back(std::move(center));
  return UniformHypergraph(k, std::size_t{k - 1} * k + 1, std::move(edges));
}

UniformHypergraph make_complete(unsigned k, std::size_t n) {
  std::vector<Edge> edges;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  // prev_permutation over a leading-true mask walks subsets in lexicographic order
  do {
    Edge e;
    for (std::size_t v = 0; v < n; ++v)
      if (mask[v]) e.push_back(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return UniformHypergraph(k, n, std::move(edges));
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Hyperstar&) { return std::string("hyperstar"); },
                        [](const Hypercycle&) { return std::string("hypercycle"); },
                        [](const Hyperpath&) { return std::string("hyperpath"); },
                        [](const Sunflower&) { return std::string("sunflower"); },
                        [](const PowerOf&) { return std::string("power"); },
                        [](const Complete&) { return std::string("complete"); },
                    },
                    spec);
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Hyperstar& f) { os << "hyperstar(k=" << f.k << ",d=" << f.d << ")"; },
                 [&](const Hypercycle& f) { os << "hypercycle(k=" << f.k << ",s=" << f.s << ")"; },
                 [&](const Hyperpath& f) { os << "hyperpath(k=" << f.k << ",d=" << f.d << ")"; },
                 [&](const Sunflower& f) { os << "sunflower(k=" << f.k << ")"; },
                 [&](const PowerOf& f) {
                   os << "power(k=" << f.k << ",n_g=" << f.base.n() << ",m_g=" << f.base.num_edges() << ")";
                 },
                 [&](const Complete& f) { os << "complete(k=" << f.k << ",n=" << f.n << ")"; },
             },
             spec);
  return os.str();
}

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const Hyperstar& f) {
                   require_uniformity(f.k);
                   require(f.d >= 1, "hyperstar size d must be at least 1");
                 },
                 [](const Hypercycle& f) {
                   require_uniformity(f.k);
                   require(f.s >= 2, "hypercycle size s must be at least 2");
                 },
                 [](const Hyperpath& f) {
                   require_uniformity(f.k);
                   require(f.d >= 1, "hyperpath length d must be at least 1");
                 },
                 [](const Sunflower& f) { require_uniformity(f.k); },
                 [](const PowerOf& f) {
                   require_uniformity(f.k);
                   require(f.base.num_edges() >= 1, "power base graph needs at least one edge");
                 },
                 [](const Complete& f) {
                   require_uniformity(f.k);
                   require(f.n >= f.k, "complete hypergraph needs n >= k");
                   require(binomial_capped(f.n, f.k) <= kMaxCompleteEdges, "complete hypergraph too large");
                 },
             },
             spec);
}

UniformHypergraph kth_power(const Graph& g, unsigned k) {
  require_uniformity(k);
  require(g.num_edges() >= 1, "power base graph needs at least one edge");
  const std::size_t fresh_per_edge = k - 2;
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto [a, b] = g.edges()[i];
    Edge e{a, b};
    for (std::size_t t = 0; t < fresh_per_edge; ++t)
      e.push_back(static_cast<Vertex>(g.n() + i * fresh_per_edge + t));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, g.n() + fresh_per_edge * g.num_edges(), std::move(edges));
}

UniformHypergraph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Hyperstar& f) { return make_hyperstar(f.k, f.d); },
                        [](const Hypercycle& f) { return make_hypercycle(f.k, f.s); },
                        [](const Hyperpath& f) { return make_hyperpath(f.k, f.d); },
                        [](const Sunflower& f) { return make_sunflower(f.k); },
                        [](const PowerOf& f) { return kth_power(f.base, f.k); },
                        [](const Complete& f) { return make_complete(f.k, f.n); },
                    },
                    spec);
}

std::optional<FamilySpec> identify_family(const UniformHypergraph& h) {
  const unsigned k = h.k();
  const std::size_t m = h.num_edges();
  const std::size_t n = h.n();
  std::vector<FamilySpec> candidates;
  if (n == m * (k - 1) + 1) {
    candidates.push_back(Hyperstar{k, m});
    candidates.push_back(Hyperpath{k, m});
  }
  if (m >= 2 && n == m * (k - 1)) candidates.push_back(Hypercycle{k, m});
  if (m == k && n == std::size_t{k - 1} * k + 1) candidates.push_back(Sunflower{k});
  if (binomial_capped(n, k) == m) candidates.push_back(Complete{k, n});

  const auto target = h.canonical();
  for (const auto& c : candidates) {
    if (generate(c).canonical() == target) return c;
  }
  return std::nullopt;
}

}  // namespace hyperlap
