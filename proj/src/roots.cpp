#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperlap/eigensolvers.hpp"
#include "hyperlap/error.hpp"

namespace hyperlap {

namespace {

constexpr std::size_t kGridCells = 10'000;
constexpr double kTangentialThreshold = 1e-6;
constexpr double kDedup = 1e-8;
constexpr int kNewtonSteps = 100;

bool usable(double v) { return std::isfinite(v); }

// Newton from t0, staying inside the domain. Returns NaN on failure.
double newton(const ScalarFunction& f, double t0, Interval domain, double accept) {
  double t = t0;
  for (int i = 0; i < kNewtonSteps; ++i) {
    const double v = f(t);
    if (!usable(v)) return std::nan("");
    if (v == 0.0) return t;
    const double s = f.slope(t);
    if (!usable(s) || s == 0.0) break;
    const double next = t - v / s;
    if (next < domain.lo || next > domain.hi || !usable(f(next))) break;
    if (next == t) break;
    t = next;
  }
  const double v = f(t);
  return usable(v) && std::abs(v) <= accept ? t : std::nan("");
}

}  // namespace

double ScalarFunction::slope(double t) const {
  if (derivative) return derivative(t);
  const double h = 1e-7 * std::max(1.0, std::abs(t));
  return (value(t + h) - value(t - h)) / (2.0 * h);
}

double bisect(const ScalarFunction& f, double lo, double hi, const SolverOptions& opts) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!usable(flo) || !usable(fhi) || std::signbit(flo) == std::signbit(fhi)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "]: f = " << flo << ", " << fhi;
    throw Error(ErrorCode::NoSignChange, os.str());
  }
  std::size_t iter = 0;
  while (hi - lo > opts.tol_root) {
    if (++iter > opts.max_iter) throw MaxIterationsError("bisection budget exhausted", lo, hi);
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double mid = lo + 0.5 * (hi - lo);
  const double fm = f(mid);
  const double s = f.slope(mid);
  if (usable(s) && s != 0.0) {
    const double polished = mid - fm / s;
    if (polished >= lo && polished <= hi) {
      const double fp = f(polished);
      if (usable(fp) && std::abs(fp) <= std::abs(fm)) return polished;
    }
  }
  return mid;
}

std::vector<double> all_real_roots(const ScalarFunction& f, Interval domain, const SolverOptions& opts) {
  const double width = domain.hi - domain.lo;
  std::vector<double> t(kGridCells + 1);
  std::vector<double> v(kGridCells + 1);
  for (std::size_t i = 0; i <= kGridCells; ++i) {
    t[i] = i == kGridCells ? domain.hi : domain.lo + width * static_cast<double>(i) / kGridCells;
    v[i] = f(t[i]);
  }

  std::vector<double> roots;
  for (std::size_t i = 0; i <= kGridCells; ++i) {
    if (!usable(v[i])) continue;
    if (v[i] == 0.0) {
      roots.push_back(t[i]);
      continue;
    }
    if (i < kGridCells && usable(v[i + 1]) && v[i + 1] != 0.0 && std::signbit(v[i]) != std::signbit(v[i + 1])) {
      roots.push_back(bisect(f, t[i], t[i + 1], opts));
    }
  }

  // tangential roots: local minima of |f| that do not change sign
  for (std::size_t i = 0; i <= kGridCells; ++i) {
    const double a = std::abs(v[i]);
    if (!usable(v[i]) || a >= kTangentialThreshold || a == 0.0) continue;
    const bool left_ok = i == 0 || (usable(v[i - 1]) && std::abs(v[i - 1]) >= a);
    const bool right_ok = i == kGridCells || (usable(v[i + 1]) && std::abs(v[i + 1]) >= a);
    if (!left_ok || !right_ok) continue;
    const double r = newton(f, t[i], domain, opts.tol_root);
    if (!std::isnan(r)) roots.push_back(r);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (merged.empty() || r - merged.back() > kDedup) merged.push_back(r);
  }
  return merged;
}

}  // namespace hyperlap
