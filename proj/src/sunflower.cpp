#include <cmath>
#include <sstream>

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"

namespace hyperlap {

namespace {

void require_sunflower(unsigned k) {
  if (k < 3) throw Error(ErrorCode::InvalidFamilyParameter, "sunflower needs k >= 3");
}

}  // namespace

ScalarFunction sunflower_function(unsigned k) {
  require_sunflower(k);
  const double root = 1.0 / static_cast<double>(k - 1);
  return ScalarFunction{
      [=](double m) { return (m - 2.0) - std::pow(m - 1.0, -root) - ipow(1.0 / (m - 1.0), k - 1); },
      [=](double m) {
        return 1.0 + root * std::pow(m - 1.0, -root - 1.0) + (k - 1) * ipow(1.0 / (m - 1.0), k);
      },
      Interval{2.0, 4.0},
  };
}

SunflowerParameters sunflower_parameters(unsigned k, double mu) {
  require_sunflower(k);
  SunflowerParameters p;
  p.mu = mu;
  p.gamma = 1.0 / (mu - 1.0);
  p.alpha = std::pow(p.gamma, 1.0 / static_cast<double>(k - 1));
  p.mu_from_center = 1.0 + 1.0 / ipow(p.alpha, k - 1);
  p.mu_from_anchor = 2.0 + p.alpha + ipow(p.gamma, k - 1);
  return p;
}

DenseVector sunflower_positive_vector(unsigned k, double mu) {
  const auto p = sunflower_parameters(k, mu);
  DenseVector x(std::size_t{k - 1} * k + 1, p.gamma);
  for (unsigned j = 0; j + 1 < k; ++j) x[std::size_t{j} * k] = 1.0;
  x.back() = p.alpha;
  return x;
}

SpectrumEntry sunflower_lambda_max(unsigned k, const SolverOptions& opts) {
  require_sunflower(k);
  const UniformHypergraph h = generate(Sunflower{k});
  if (k % 2 == 1) {
    DenseVector x(h.n(), 0.0);
    x[0] = 1.0;
    auto pair = make_eigenpair(h, TensorKind::laplacian, 2.0, std::move(x));
    return make_entry(2.0, "lambda=2 anchor", std::move(pair), opts.tol_residual);
  }
  const auto f = sunflower_function(k);
  const double mu = bisect(f, f.domain.lo, f.domain.hi, opts);
  DenseVector x = sunflower_positive_vector(k, mu);
  const auto cored = cored_structure(h);
  for (Vertex v : *cored) x[v] = -x[v];
  auto pair = make_eigenpair(h, TensorKind::laplacian, mu, std::move(x));
  return make_entry(mu, "sunflower largest root", std::move(pair), opts.tol_residual);
}

}  // namespace hyperlap
