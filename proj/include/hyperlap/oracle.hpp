#pragma once

#include <optional>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/options.hpp"
#include "hyperlap/spectrum.hpp"
#include "hyperlap/tensor_ops.hpp"

namespace hyperlap {

struct OracleFinding {
  double lambda = 0.0;
  DenseVector x;  // unit infinity norm
  double residual = 0.0;
  std::size_t basin_count = 0;
};

/// Largest instance the oracle accepts, measured as k * |E|.
inline constexpr std::size_t kOracleSizeLimit = 10'000;

/// Damped Newton on lambda x^{k-1} = T x^{k-1} from opts.restarts random
/// starts. Restart r draws x from [-1,1]^n and lambda from [0, 2 * max degree]
/// using seed + r; the largest-magnitude coordinate stays fixed, which keeps
/// the system square. Converged pairs are merged when lambda agrees within
/// 1e-8 and the normalized vectors agree within 1e-6 up to sign. Ascending.
std::vector<OracleFinding> multistart_search(const UniformHypergraph& h, const SolverOptions& opts,
                                             TensorKind kind = TensorKind::laplacian);

/// Gauss-Newton on x with lambda frozen, from x0. Present only when the
/// refined residual is within opts.tol_residual.
std::optional<EigenPair> certify(const UniformHypergraph& h, double lambda, const DenseVector& x0,
                                 const SolverOptions& opts, TensorKind kind = TensorKind::laplacian);

enum class CompareStatus { agree, oracle_subset, disagree };

struct SpectrumDiff {
  std::vector<std::pair<double, double>> matched;  // (catalog, oracle)
  std::vector<double> catalog_only;
  std::vector<double> oracle_only;
  CompareStatus status = CompareStatus::agree;
};

/// Matches certified catalog entries against oracle findings within `tol`.
/// Status is agree when nothing is unmatched, oracle_subset when only catalog
/// values are unmatched, disagree when the oracle found a value the catalog
/// lacks.
SpectrumDiff spectrum_compare(const SpectrumReport& catalog, const std::vector<OracleFinding>& findings, double tol);

std::string_view to_string(CompareStatus status) noexcept;

}  // namespace hyperlap
