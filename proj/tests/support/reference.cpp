#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace hyperlap::testing {

namespace {

using Tuple = std::vector<Vertex>;

std::map<Tuple, double> adjacency_entries(const UniformHypergraph& h) {
  double factorial = 1.0;
  for (unsigned i = 2; i < h.k(); ++i) factorial *= i;
  std::map<Tuple, double> entries;
  for (const auto& e : h.edges()) {
    Tuple t = e;
    std::sort(t.begin(), t.end());
    do {
      entries[t] += 1.0 / factorial;
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return entries;
}

}  // namespace

DenseVector dense_apply(const UniformHypergraph& h, TensorKind kind, const DenseVector& x) {
  const unsigned k = h.k();
  DenseVector ax(h.n(), 0.0);
  for (const auto& [t, a] : adjacency_entries(h)) {
    double prod = a;
    for (unsigned j = 1; j < k; ++j) prod *= x[t[j]];
    ax[t[0]] += prod;
  }
  if (kind == TensorKind::adjacency) return ax;
  DenseVector out(h.n());
  const double sign = kind == TensorKind::laplacian ? -1.0 : 1.0;
  for (std::size_t i = 0; i < h.n(); ++i) {
    out[i] = static_cast<double>(h.degree(static_cast<Vertex>(i))) * std::pow(x[i], k - 1) + sign * ax[i];
  }
  return out;
}

std::optional<Partition> exhaustive_odd_bipartition(const UniformHypergraph& h) {
  const std::size_t n = h.n();
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    const bool ok = std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
      std::size_t c = 0;
      for (Vertex v : e) c += (mask >> v) & 1u;
      return c % 2 == 1;
    });
    if (!ok) continue;
    Partition p;
    for (Vertex v = 0; v < n; ++v) ((mask >> v) & 1u ? p.part1 : p.part2).push_back(v);
    return p;
  }
  return std::nullopt;
}

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  auto da = a.degree_vector();
  auto db = b.degree_vector();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::set<Edge> target;
  for (Edge e : b.edges()) {
    std::sort(e.begin(), e.end());
    target.insert(e);
  }
  const std::size_t n = a.n();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < a.num_edges(); ++e)
    for (Vertex v : a.edge(e)) incident[v].push_back(e);

  std::vector<long> map(n, -1);
  std::vector<bool> used(n, false);
  auto edges_consistent = [&](Vertex v) {
    for (std::size_t e : incident[v]) {
      Edge image;
      for (Vertex u : a.edge(e)) {
        if (map[u] < 0) break;
        image.push_back(static_cast<Vertex>(map[u]));
      }
      if (image.size() < a.k()) continue;
      std::sort(image.begin(), image.end());
      if (!target.count(image)) return false;
    }
    return true;
  };
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      map[v] = w;
      used[w] = true;
      if (edges_consistent(v) && extend(v + 1)) return true;
      map[v] = -1;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

std::vector<double> hyperstar_coefficients(unsigned k, double d, double r) {
  // (1 - l)^{k-1} = sum_j C(k-1, j) (-l)^j
  std::vector<double> p(k, 0.0);
  double binom = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    p[j] = binom * (j % 2 ? -1.0 : 1.0);
    binom = binom * (k - 1 - j) / (j + 1);
  }
  std::vector<double> c(k + 1, 0.0);
  for (unsigned j = 0; j < k; ++j) {
    c[j + 1] += p[j];
    c[j] -= d * p[j];
  }
  c[0] += r;
  return c;
}

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double dense_residual(const UniformHypergraph& h, TensorKind kind, double lambda, const DenseVector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  DenseVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / m;
  const auto ty = dense_apply(h, kind, y);
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    worst = std::max(worst, std::abs(lambda * std::pow(y[i], h.k() - 1) - ty[i]));
  return worst;
}

}  // namespace hyperlap::testing
