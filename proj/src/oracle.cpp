#include "hyperlap/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "hyperlap/error.hpp"

namespace hyperlap {

namespace {

constexpr int kNewtonSteps = 200;
constexpr int kHalvings = 30;
constexpr double kLambdaMerge = 1e-8;
constexpr double kVectorMerge = 1e-6;
constexpr double kConverged = 1e-14;
constexpr int kPolishSteps = 400;
constexpr double kPolishStep = 1e-15;

// F_i = (lambda - c d_i) x_i^{k-1} - sigma (A x^{k-1})_i
struct System {
  const UniformHypergraph& h;
  TensorKind kind;

  double diag_weight() const { return kind == TensorKind::adjacency ? 0.0 : 1.0; }
  double sigma() const { return kind == TensorKind::laplacian ? -1.0 : 1.0; }

  Eigen::VectorXd value(double lambda, const DenseVector& x) const {
    const DenseVector ax = apply(h, TensorKind::adjacency, x);
    Eigen::VectorXd f(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = diag_weight() * static_cast<double>(h.degree(static_cast<Vertex>(i)));
      f[static_cast<Eigen::Index>(i)] = (lambda - d) * ipow(x[i], h.k() - 1) - sigma() * ax[i];
    }
    return f;
  }

  // dF/dx
  Eigen::MatrixXd jacobian(double lambda, const DenseVector& x) const {
    const auto n = static_cast<Eigen::Index>(x.size());
    const unsigned k = h.k();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = diag_weight() * static_cast<double>(h.degree(static_cast<Vertex>(i)));
      j(i, i) = (lambda - d) * static_cast<double>(k - 1) * ipow(x[static_cast<std::size_t>(i)], k - 2);
    }
    for (const auto& e : h.edges()) {
      for (unsigned a = 0; a < k; ++a) {
        for (unsigned b = 0; b < k; ++b) {
          if (a == b) continue;
          double p = 1.0;
          for (unsigned c = 0; c < k; ++c)
            if (c != a && c != b) p *= x[e[c]];
          j(e[a], e[b]) -= sigma() * p;
        }
      }
    }
    return j;
  }
};

std::size_t largest_index(const DenseVector& x) {
  std::size_t p = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[p])) p = i;
  return p;
}

bool same_direction(const DenseVector& a, const DenseVector& b) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus = std::max(plus, std::abs(a[i] - b[i]));
    minus = std::max(minus, std::abs(a[i] + b[i]));
  }
  return std::min(plus, minus) <= kVectorMerge;
}

void check_size(const UniformHypergraph& h) {
  if (h.k() * h.num_edges() > kOracleSizeLimit) {
    throw Error(ErrorCode::InstanceTooLarge, "oracle accepts k*|E| up to " + std::to_string(kOracleSizeLimit));
  }
}

// Damped Newton on (x without coordinate p, lambda); stops early once a
// full halving sequence fails to lower the merit.
void newton_square(const System& sys, DenseVector& x, double& lambda, std::size_t p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto ip = static_cast<Eigen::Index>(p);
  Eigen::VectorXd f = sys.value(lambda, x);
  double merit = f.norm();
  for (int step = 0; step < kNewtonSteps && merit > kConverged; ++step) {
    Eigen::MatrixXd j = sys.jacobian(lambda, x);
    for (Eigen::Index i = 0; i < n; ++i) j(i, ip) = ipow(x[static_cast<std::size_t>(i)], sys.h.k() - 1);
    const Eigen::VectorXd delta = j.colPivHouseholderQr().solve(-f);
    if (!delta.allFinite()) return;

    double t = 1.0;
    bool improved = false;
    for (int half = 0; half <= kHalvings; ++half, t *= 0.5) {
      DenseVector trial = x;
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != ip) trial[static_cast<std::size_t>(i)] += t * delta[i];
      const double trial_lambda = lambda + t * delta[ip];
      Eigen::VectorXd tf = sys.value(trial_lambda, trial);
      const double tm = tf.norm();
      if (std::isfinite(tm) && tm < merit) {
        x = std::move(trial);
        lambda = trial_lambda;
        f = std::move(tf);
        merit = tm;
        improved = true;
        break;
      }
    }
    if (!improved) return;
  }
}

// Full Newton steps after convergence. Coordinates that vanish at the root
// sit on a singular direction of x^{k-1} and only shrink by (k-2)/(k-1) per
// step, so they are left near merit^{1/(k-1)} by the damped phase.
void polish(const System& sys, DenseVector& x, double& lambda, std::size_t p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto ip = static_cast<Eigen::Index>(p);
  Eigen::VectorXd f = sys.value(lambda, x);
  double merit = f.norm();
  if (!(merit <= kConverged)) return;
  for (int step = 0; step < kPolishSteps; ++step) {
    Eigen::MatrixXd j = sys.jacobian(lambda, x);
    for (Eigen::Index i = 0; i < n; ++i) j(i, ip) = ipow(x[static_cast<std::size_t>(i)], sys.h.k() - 1);
    const Eigen::VectorXd delta = j.colPivHouseholderQr().solve(-f);
    if (!delta.allFinite()) return;
    DenseVector trial = x;
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != ip) trial[static_cast<std::size_t>(i)] += delta[i];
    const double trial_lambda = lambda + delta[ip];
    Eigen::VectorXd tf = sys.value(trial_lambda, trial);
    const double tm = tf.norm();
    if (!std::isfinite(tm) || tm > std::max(merit, kConverged)) return;
    x = std::move(trial);
    lambda = trial_lambda;
    f = std::move(tf);
    merit = tm;
    if (delta.lpNorm<Eigen::Infinity>() <= kPolishStep) return;
  }
}

// Newton stalls next to roots with vanishing coordinates. Zeroes every
// coordinate below a threshold, trying thresholds from 1e-2 down to 1e-14,
// and keeps the first snapped vector whose residual does not exceed the
// unsnapped one (or the rounding floor).
void snap_zeros(const UniformHypergraph& h, TensorKind kind, DenseVector& x, double lambda) {
  const double res = residual(h, kind, lambda, x);
  const double m = inf_norm(x);
  for (double t = 1e-2; t >= 1e-14; t *= 0.1) {
    DenseVector y = x;
    bool changed = false;
    for (double& v : y) {
      if (v != 0.0 && std::abs(v) <= t * m) {
        v = 0.0;
        changed = true;
      }
    }
    if (!changed || inf_norm(y) == 0.0) continue;
    if (residual(h, kind, lambda, y) <= std::max(res, kConverged)) {
      x = std::move(y);
      return;
    }
  }
}

// Damped Gauss-Newton on x without coordinate p, lambda frozen.
void gauss_newton(const System& sys, DenseVector& x, double lambda, std::size_t p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto ip = static_cast<Eigen::Index>(p);
  Eigen::VectorXd f = sys.value(lambda, x);
  double merit = f.norm();
  for (int step = 0; step < kNewtonSteps && merit > kConverged; ++step) {
    const Eigen::MatrixXd full = sys.jacobian(lambda, x);
    Eigen::MatrixXd j(n, n - 1);
    for (Eigen::Index c = 0, out = 0; c < n; ++c)
      if (c != ip) j.col(out++) = full.col(c);
    const Eigen::VectorXd delta = j.completeOrthogonalDecomposition().solve(-f);
    if (!delta.allFinite()) return;

    double t = 1.0;
    bool improved = false;
    for (int half = 0; half <= kHalvings; ++half, t *= 0.5) {
      DenseVector trial = x;
      for (Eigen::Index c = 0, in = 0; c < n; ++c)
        if (c != ip) trial[static_cast<std::size_t>(c)] += t * delta[in++];
      Eigen::VectorXd tf = sys.value(lambda, trial);
      const double tm = tf.norm();
      if (std::isfinite(tm) && tm < merit) {
        x = std::move(trial);
        f = std::move(tf);
        merit = tm;
        improved = true;
        break;
      }
    }
    if (!improved) return;
  }
}

}  // namespace

std::vector<OracleFinding> multistart_search(const UniformHypergraph& h, const SolverOptions& opts,
                                             TensorKind kind) {
  check_size(h);
  const System sys{h, kind};
  const double lambda_hi = 2.0 * static_cast<double>(h.max_degree());
  std::vector<OracleFinding> found;

  for (std::size_t r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(opts.seed + r);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> spread(0.0, lambda_hi);
    DenseVector x(h.n());
    for (double& v : x) v = coord(rng);
    double lambda = spread(rng);
    const std::size_t p = largest_index(x);
    x[p] = x[p] < 0.0 ? -1.0 : 1.0;

    newton_square(sys, x, lambda, p);
    polish(sys, x, lambda, p);
    if (!std::isfinite(lambda) || inf_norm(x) == 0.0 || !std::isfinite(inf_norm(x))) continue;
    if (!(residual(h, kind, lambda, x) <= opts.tol_residual)) continue;
    snap_zeros(h, kind, x, lambda);
    const double res = residual(h, kind, lambda, x);

    DenseVector y = normalized(x);
    auto match = std::find_if(found.begin(), found.end(), [&](const OracleFinding& f) {
      return std::abs(f.lambda - lambda) <= kLambdaMerge && same_direction(f.x, y);
    });
    if (match != found.end()) {
      ++match->basin_count;
    } else {
      found.push_back(OracleFinding{lambda, std::move(y), res, 1});
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const OracleFinding& a, const OracleFinding& b) { return a.lambda < b.lambda; });
  return found;
}

std::optional<EigenPair> certify(const UniformHypergraph& h, double lambda, const DenseVector& x0,
                                 const SolverOptions& opts, TensorKind kind) {
  check_size(h);
  if (x0.size() != h.n()) throw Error(ErrorCode::DimensionMismatch, "start vector length differs from n");
  DenseVector x = normalized(x0);
  const System sys{h, kind};
  gauss_newton(sys, x, lambda, largest_index(x));
  if (!std::isfinite(inf_norm(x)) || inf_norm(x) == 0.0) return std::nullopt;
  EigenPair pair = make_eigenpair(h, kind, lambda, normalized(x));
  if (!(pair.residual <= opts.tol_residual)) return std::nullopt;
  return pair;
}

SpectrumDiff spectrum_compare(const SpectrumReport& catalog, const std::vector<OracleFinding>& findings,
                              double tol) {
  SpectrumDiff diff;
  const auto values = catalog.certified_values();
  std::vector<bool> oracle_hit(findings.size(), false);
  for (double v : values) {
    bool hit = false;
    for (std::size_t i = 0; i < findings.size(); ++i) {
      if (std::abs(findings[i].lambda - v) <= tol) {
        if (!hit) diff.matched.emplace_back(v, findings[i].lambda);
        hit = true;
        oracle_hit[i] = true;
      }
    }
    if (!hit) diff.catalog_only.push_back(v);
  }
  for (std::size_t i = 0; i < findings.size(); ++i) {
    if (oracle_hit[i]) continue;
    const double v = findings[i].lambda;
    if (diff.oracle_only.empty() || std::abs(diff.oracle_only.back() - v) > tol) diff.oracle_only.push_back(v);
  }
  if (!diff.oracle_only.empty()) {
    diff.status = CompareStatus::disagree;
  } else if (!diff.catalog_only.empty()) {
    diff.status = CompareStatus::oracle_subset;
  }
  return diff;
}

std::string_view to_string(CompareStatus status) noexcept {
  switch (status) {
    case CompareStatus::agree: return "agree";
    case CompareStatus::oracle_subset: return "oracle-subset";
    case CompareStatus::disagree: return "disagree";
  }
  return "unknown";
}

}  // namespace hyperlap
