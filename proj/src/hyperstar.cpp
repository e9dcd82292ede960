#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"

namespace hyperlap {

namespace {

constexpr double kUnitGap = 1e-8;

void require_hyperstar(unsigned k, std::size_t d) {
  if (k < 3) throw Error(ErrorCode::InvalidFamilyParameter, "hyperstar spectrum needs k >= 3");
  if (d < 2) throw Error(ErrorCode::InvalidFamilyParameter, "hyperstar spectrum needs d >= 2");
}

Vertex pendant(unsigned k, std::size_t edge, unsigned t) { return static_cast<Vertex>(1 + edge * (k - 1) + t); }

DenseVector build(unsigned k, std::size_t d, double lambda, const std::vector<std::size_t>& chosen,
                  const DenseVector& signs) {
  DenseVector x(d * (k - 1) + 1, 0.0);
  x[0] = 1.0 - lambda;
  for (std::size_t e : chosen) {
    for (unsigned t = 0; t + 1 < k; ++t) {
      const Vertex v = pendant(k, e, t);
      x[v] = signs.empty() ? 1.0 : signs[v];
    }
  }
  return x;
}

}  // namespace

ScalarFunction hyperstar_polynomial(unsigned k, std::size_t d, std::size_t r) {
  const double dd = static_cast<double>(d);
  const double rr = static_cast<double>(r);
  return ScalarFunction{
      [=](double l) { return (l - dd) * ipow(1.0 - l, k - 1) + rr; },
      [=](double l) { return ipow(1.0 - l, k - 1) - (k - 1) * (l - dd) * ipow(1.0 - l, k - 2); },
      Interval{-1.0, 2.0 * dd + 1.0},
  };
}

ScalarFunction hyperstar_signless_polynomial(unsigned k, std::size_t d) {
  const double dd = static_cast<double>(d);
  return ScalarFunction{
      [=](double m) { return (m - dd) * ipow(m - 1.0, k - 1) - dd; },
      [=](double m) { return ipow(m - 1.0, k - 1) + (k - 1) * (m - dd) * ipow(m - 1.0, k - 2); },
      Interval{dd, 2.0 * dd},
  };
}

SpectrumReport hyperstar_spectrum(unsigned k, std::size_t d, const SolverOptions& opts) {
  require_hyperstar(k, d);
  const UniformHypergraph h = generate(Hyperstar{k, d});
  SpectrumReport report;
  report.family = Hyperstar{k, d};
  report.family_text = describe(*report.family);
  report.k = k;
  report.max_degree = d;
  report.method = "closed form";

  for (std::size_t r = 0; r <= d; ++r) {
    const auto f = hyperstar_polynomial(k, d, r);
    for (double lambda : all_real_roots(f, f.domain, opts)) {
      if (std::abs(lambda - 1.0) <= kUnitGap) continue;
      std::vector<std::size_t> chosen(r);
      for (std::size_t i = 0; i < r; ++i) chosen[i] = i;
      auto pair = make_eigenpair(h, TensorKind::laplacian, lambda, build(k, d, lambda, chosen, {}));
      report.add(make_entry(lambda, "f_r root, r=" + std::to_string(r), std::move(pair), opts.tol_residual));
    }
  }
  auto unit = make_eigenpair(h, TensorKind::laplacian, 1.0, hyperstar_lambda1_witness(k, d));
  report.add(make_entry(1.0, "lambda=1 hyperstar", std::move(unit), opts.tol_residual));
  report.finalize();
  return report;
}

DenseVector hyperstar_eigenvectors(unsigned k, std::size_t d, double lambda, std::size_t r,
                                   const std::vector<std::size_t>& chosen_edges, const DenseVector& signs,
                                   const SolverOptions& opts) {
  require_hyperstar(k, d);
  const std::size_t n = d * (k - 1) + 1;
  if (std::abs(lambda - 1.0) <= kUnitGap) {
    throw Error(ErrorCode::WrongRootForR, "lambda = 1 is not covered by this construction");
  }
  if (r > d || chosen_edges.size() != r) {
    throw Error(ErrorCode::ChoiceCountMismatch,
                std::to_string(chosen_edges.size()) + " edges chosen for r = " + std::to_string(r));
  }
  std::set<std::size_t> distinct(chosen_edges.begin(), chosen_edges.end());
  if (distinct.size() != chosen_edges.size() || (!distinct.empty() && *distinct.rbegin() >= d)) {
    throw Error(ErrorCode::ChoiceCountMismatch, "chosen edges must be distinct indices below d");
  }
  if (!signs.empty() && signs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "sign vector must have one entry per vertex");
  }
  for (std::size_t e : chosen_edges) {
    std::size_t negatives = 0;
    for (unsigned t = 0; t + 1 < k; ++t) {
      const double s = signs.empty() ? 1.0 : signs[pendant(k, e, t)];
      if (s != 1.0 && s != -1.0) throw Error(ErrorCode::SignParityViolation, "signs must be +1 or -1");
      if (s < 0) ++negatives;
    }
    if (k % 2 == 1 && negatives > 0) {
      throw Error(ErrorCode::SignParityViolation, "odd k admits only +1 pendant signs");
    }
    if (negatives % 2 == 1) {
      throw Error(ErrorCode::SignParityViolation,
                  "edge " + std::to_string(e + 1) + " has an odd number of -1 pendant signs");
    }
  }
  const double scale = ipow(std::max(1.0, std::abs(1.0 - lambda)), k - 1);
  const double f = hyperstar_polynomial(k, d, r)(lambda);
  if (std::abs(f) / scale > opts.tol_residual) {
    std::ostringstream os;
    os << "lambda = " << lambda << " is not a root of f_" << r << " (value " << f << ")";
    throw Error(ErrorCode::WrongRootForR, os.str());
  }

  DenseVector x = build(k, d, lambda, chosen_edges, signs);
  const double res = residual(generate(Hyperstar{k, d}), TensorKind::laplacian, lambda, x);
  if (res > opts.tol_residual) {
    std::ostringstream os;
    os << "constructed vector has residual " << res;
    throw Error(ErrorCode::NotAnEigenpair, os.str());
  }
  return x;
}

bool hyperstar_lambda1_check(unsigned k, std::size_t d, const DenseVector& x, const SolverOptions& opts) {
  require_hyperstar(k, d);
  const std::size_t n = d * (k - 1) + 1;
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from hyperstar size");
  if (inf_norm(x) == 0.0) return false;
  const DenseVector y = normalized(x);
  if (std::abs(y[0]) > opts.tol_struct) return false;
  double sum = 0.0;
  for (std::size_t e = 0; e < d; ++e) {
    double p = 1.0;
    for (unsigned t = 0; t + 1 < k; ++t) p *= y[pendant(k, e, t)];
    sum += p;
  }
  if (std::abs(sum) > opts.tol_struct) return false;

  // the residual is bounded by the two quantities just tested
  const double res = residual(generate(Hyperstar{k, d}), TensorKind::laplacian, 1.0, y);
  const double bound = opts.tol_residual + std::abs(sum) + static_cast<double>(d) * std::abs(y[0]);
  if (res > bound) {
    std::ostringstream os;
    os << "lambda = 1 relation holds but residual is " << res;
    throw Error(ErrorCode::NotAnEigenpair, os.str());
  }
  return true;
}

DenseVector hyperstar_lambda1_witness(unsigned k, std::size_t d) {
  require_hyperstar(k, d);
  DenseVector x(d * (k - 1) + 1, 0.0);
  for (unsigned t = 0; t + 1 < k; ++t) {
    x[pendant(k, 0, t)] = 1.0;
    x[pendant(k, 1, t)] = 1.0;
  }
  x[pendant(k, 1, 0)] = -1.0;
  return x;
}

}  // namespace hyperlap
