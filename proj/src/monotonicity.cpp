#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"

namespace hyperlap {

namespace {
constexpr double kCrossCheck = 1e-8;
}

std::string_view to_string(MonotoneFamily family) noexcept {
  return family == MonotoneFamily::hyperstar ? "hyperstar" : "hypercycle";
}

MonotonicityResult monotonicity_check(MonotoneFamily family, std::size_t parameter, const std::vector<unsigned>& ks,
                                      const SolverOptions& opts, double margin) {
  if (ks.empty()) throw Error(ErrorCode::InvalidFamilyParameter, "k list is empty");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 3) throw Error(ErrorCode::InvalidFamilyParameter, "every k must be at least 3");
    if (i > 0 && ks[i] <= ks[i - 1]) throw Error(ErrorCode::InvalidFamilyParameter, "k list must be ascending");
  }
  const bool star = family == MonotoneFamily::hyperstar;
  if (star && parameter < 1) throw Error(ErrorCode::InvalidFamilyParameter, "hyperstar size d must be at least 1");
  if (!star && parameter < 2) throw Error(ErrorCode::InvalidFamilyParameter, "hypercycle size s must be at least 2");

  MonotonicityResult out;
  out.family = family;
  out.parameter = parameter;
  out.ks = ks;
  const double degree = star ? static_cast<double>(parameter) : 2.0;

  for (unsigned k : ks) {
    const UniformHypergraph h =
        star ? generate(Hyperstar{k, parameter}) : generate(Hypercycle{k, parameter});
    const double iterated = power_iteration_q(h, opts).lambda;
    double value = iterated;
    if (star) {
      const auto q = hyperstar_signless_polynomial(k, parameter);
      // q(d) = -d < 0 and q(2d) = d^k - d >= 0
      value = bisect(q, q.domain.lo, q.domain.hi, opts);
    }
    out.lambda_q.push_back(value);
    out.iteration.push_back(iterated);
    // odd k: every Laplacian eigenvalue is at most the maximum degree
    out.lambda_l.push_back(k % 2 == 0 ? value : degree);
  }

  out.cross_checked = true;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (std::abs(out.lambda_q[i] - out.iteration[i]) > kCrossCheck) out.cross_checked = false;
  }
  out.above_degree = std::all_of(out.lambda_q.begin(), out.lambda_q.end(), [&](double v) { return v > degree; });
  out.strictly_decreasing = true;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < out.lambda_q.size(); ++i) {
    const double gap = out.lambda_q[i - 1] - out.lambda_q[i];
    out.min_gap = std::min(out.min_gap, gap);
    if (!(gap > margin)) out.strictly_decreasing = false;
  }
  if (out.lambda_q.size() < 2) out.min_gap = 0.0;
  return out;
}

}  // namespace hyperlap
