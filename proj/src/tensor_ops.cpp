#include "hyperlap/tensor_ops.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlap/error.hpp"

namespace hyperlap {

std::string_view to_string(TensorKind kind) noexcept {
  switch (kind) {
    case TensorKind::adjacency: return "adjacency";
    case TensorKind::laplacian: return "laplacian";
    case TensorKind::signless: return "signless";
  }
  return "unknown";
}

TensorKind tensor_kind_from_string(std::string_view name) {
  if (name == "adjacency" || name == "A") return TensorKind::adjacency;
  if (name == "laplacian" || name == "L") return TensorKind::laplacian;
  if (name == "signless" || name == "Q") return TensorKind::signless;
  throw Error(ErrorCode::ParseError, "unknown tensor kind '" + std::string(name) + "'");
}

double ipow(double x, unsigned p) noexcept {
  double result = 1.0;
  while (p > 0) {
    if (p & 1U) result *= x;
    x *= x;
    p >>= 1U;
  }
  return result;
}

DenseVector apply(const UniformHypergraph& h, TensorKind kind, std::span<const double> x) {
  if (x.size() != h.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has length " + std::to_string(x.size()) + ", hypergraph has " + std::to_string(h.n()));
  }
  const unsigned k = h.k();
  DenseVector out(h.n(), 0.0);
  std::vector<double> prefix(k + 1);
  std::vector<double> suffix(k + 1);

  for (const auto& e : h.edges()) {
    prefix[0] = 1.0;
    for (unsigned t = 0; t < k; ++t) prefix[t + 1] = prefix[t] * x[e[t]];
    suffix[k] = 1.0;
    for (unsigned t = k; t-- > 0;) suffix[t] = suffix[t + 1] * x[e[t]];
    for (unsigned t = 0; t < k; ++t) out[e[t]] += prefix[t] * suffix[t + 1];
  }
  if (kind == TensorKind::adjacency) return out;

  const double sign = kind == TensorKind::laplacian ? -1.0 : 1.0;
  for (std::size_t i = 0; i < h.n(); ++i) {
    out[i] = static_cast<double>(h.degree(static_cast<Vertex>(i))) * ipow(x[i], k - 1) + sign * out[i];
  }
  return out;
}

double inf_norm(std::span<const double> x) noexcept {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

DenseVector normalized(std::span<const double> x) {
  const double m = inf_norm(x);
  if (!(m > 0.0)) throw Error(ErrorCode::ZeroVector, "vector is zero");
  DenseVector y(x.begin(), x.end());
  for (double& v : y) v /= m;
  return y;
}

double residual(const UniformHypergraph& h, TensorKind kind, double lambda, std::span<const double> x) {
  if (x.size() != h.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has length " + std::to_string(x.size()) + ", hypergraph has " + std::to_string(h.n()));
  }
  const DenseVector y = normalized(x);
  const DenseVector ty = apply(h, kind, y);
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    worst = std::max(worst, std::abs(lambda * ipow(y[i], h.k() - 1) - ty[i]));
  }
  return worst;
}

EigenPair make_eigenpair(const UniformHypergraph& h, TensorKind kind, double lambda, DenseVector x) {
  EigenPair p;
  p.lambda = lambda;
  p.kind = kind;
  p.residual = residual(h, kind, lambda, x);
  p.x = std::move(x);
  return p;
}

bool StructuralReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.applicable || c.passed; });
}

std::size_t StructuralReport::applicable_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.applicable; }));
}

}  // namespace hyperlap
