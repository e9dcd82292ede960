#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperlap/eigensolvers.hpp"
#include "hyperlap/error.hpp"

namespace hyperlap {

bool IterationTrace::monotone(double slack) const {
  for (std::size_t i = 1; i < lower.size(); ++i) {
    if (lower[i] < lower[i - 1] - slack * std::max(1.0, std::abs(lower[i - 1]))) return false;
    if (upper[i] > upper[i - 1] + slack * std::max(1.0, std::abs(upper[i - 1]))) return false;
  }
  return true;
}

EigenPair power_iteration_q(const UniformHypergraph& h, const SolverOptions& opts, IterationTrace* trace) {
  if (!is_connected(h)) throw Error(ErrorCode::NotConnected, "power iteration needs a connected hypergraph");
  const unsigned k = h.k();
  const double root = 1.0 / static_cast<double>(k - 1);
  DenseVector x(h.n(), 1.0);
  double lo = 0.0;
  double hi = 0.0;

  for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
    DenseVector y = apply(h, TensorKind::signless, x);
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double ratio = y[i] / ipow(x[i], k - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (trace) {
      trace->lower.push_back(lo);
      trace->upper.push_back(hi);
      trace->iterations = iter;
    }
    if (hi - lo <= opts.tol_iter) {
      return make_eigenpair(h, TensorKind::signless, lo + 0.5 * (hi - lo), std::move(x));
    }

    double peak = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!(y[i] > 0.0)) {
        std::ostringstream os;
        os << "iterate entry " << i + 1 << " is " << y[i] << " at iteration " << iter;
        throw Error(ErrorCode::NonPositiveIterate, os.str());
      }
      y[i] = std::pow(y[i], root);
      peak = std::max(peak, y[i]);
    }
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] / peak;
  }
  std::ostringstream os;
  os << "bounds [" << lo << ", " << hi << "] did not close within " << opts.max_iter << " iterations";
  throw MaxIterationsError(os.str(), lo, hi);
}

EigenPair lambda_l_even_cored(const UniformHypergraph& h, const SolverOptions& opts) {
  if (h.k() % 2 != 0) throw Error(ErrorCode::OddUniformity, "sign-flip transfer needs even uniformity");
  const auto cored = cored_structure(h);
  if (!cored) throw Error(ErrorCode::NotCored, "some edge has no degree-1 vertex");
  EigenPair q = power_iteration_q(h, opts);
  DenseVector x = q.x;
  for (Vertex v : *cored) x[v] = -x[v];
  EigenPair l = make_eigenpair(h, TensorKind::laplacian, q.lambda, std::move(x));
  if (l.residual > opts.tol_residual) {
    std::ostringstream os;
    os << "sign-flipped vector has Laplacian residual " << l.residual;
    throw Error(ErrorCode::NotAnEigenpair, os.str());
  }
  return l;
}

}  // namespace hyperlap
