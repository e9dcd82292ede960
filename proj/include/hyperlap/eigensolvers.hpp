#pragma once

#include <functional>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/options.hpp"
#include "hyperlap/tensor_ops.hpp"

namespace hyperlap {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Real function of one variable. `derivative` may be empty, in which case a
/// central difference is used for Newton steps. Evaluation outside `domain`,
/// or a non-finite value inside it, marks a point as unusable.
struct ScalarFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  Interval domain{-1.0, 1.0};

  double operator()(double t) const { return value(t); }
  double slope(double t) const;
};

/// Bracketed bisection to width tol_root, then one Newton step from the
/// midpoint kept only if it stays inside the final bracket and lowers |f|.
double bisect(const ScalarFunction& f, double lo, double hi, const SolverOptions& opts);

/// Every real root on `domain`: sign changes over a 10^4-cell grid are
/// bisected, grid minima of |f| below 1e-6 seed Newton for tangential roots,
/// and roots closer than 1e-8 are merged. Ascending.
std::vector<double> all_real_roots(const ScalarFunction& f, Interval domain, const SolverOptions& opts);

/// Bound history of a power iteration, for tests and reports.
struct IterationTrace {
  std::vector<double> lower;
  std::vector<double> upper;
  std::size_t iterations = 0;

  /// Lower bounds never decrease and upper bounds never increase, allowing
  /// `slack` for rounding.
  bool monotone(double slack = 1e-12) const;
};

/// Largest signless Laplacian H-eigenvalue of a connected hypergraph with its
/// positive eigenvector, by normalized power iteration from the all-ones
/// vector with min/max ratio bounds.
EigenPair power_iteration_q(const UniformHypergraph& h, const SolverOptions& opts, IterationTrace* trace = nullptr);

/// For even k and a cored hypergraph: the signless result with the chosen
/// cored coordinate of every edge negated, a Laplacian pair with equal lambda.
EigenPair lambda_l_even_cored(const UniformHypergraph& h, const SolverOptions& opts);

}  // namespace hyperlap
