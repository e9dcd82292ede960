#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlap/eigensolvers.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/options.hpp"
#include "hyperlap/spectrum.hpp"

namespace hyperlap {

// ---- characteristic functions ----

/// f_r(lambda) = (lambda - d)(1 - lambda)^{k-1} + r.
ScalarFunction hyperstar_polynomial(unsigned k, std::size_t d, std::size_t r);

/// q(mu) = (mu - d)(mu - 1)^{k-1} - d; its largest root is the hyperstar's
/// largest signless eigenvalue for every k, and equals -f_d for even k.
ScalarFunction hyperstar_signless_polynomial(unsigned k, std::size_t d);

/// (mu - 2) - (mu - 1)^{-1/(k-1)} - (mu - 1)^{-(k-1)} on (1, inf).
ScalarFunction sunflower_function(unsigned k);

// ---- hyperstar ----

/// {1} plus every real root other than 1 of f_r, r = 0..d, each certified by
/// a constructed eigenvector. Requires k >= 3 and d >= 2.
SpectrumReport hyperstar_spectrum(unsigned k, std::size_t d, const SolverOptions& opts);

/// Eigenvector of hyperstar(k, d) at a root lambda != 1 of f_r: heart value
/// 1 - lambda, pendants of the chosen edges (0-based edge indices) set from
/// `signs`, everything else 0. `signs` holds one +-1 per vertex, or is empty
/// for all +1. Odd k needs all +1; even k needs an even number of -1 among the
/// pendants of each chosen edge.
DenseVector hyperstar_eigenvectors(unsigned k, std::size_t d, double lambda, std::size_t r,
                                   const std::vector<std::size_t>& chosen_edges, const DenseVector& signs,
                                   const SolverOptions& opts);

/// True when the heart value is 0, the pendant products of the edges sum to
/// 0 and x != 0 (tolerances on the unit infinity-norm representative).
bool hyperstar_lambda1_check(unsigned k, std::size_t d, const DenseVector& x, const SolverOptions& opts);

/// Heart 0, pendants of edge 1 all 1, pendants of edge 2 (-1, 1, ..., 1).
DenseVector hyperstar_lambda1_witness(unsigned k, std::size_t d);

// ---- sunflower ----

struct SunflowerParameters {
  double mu = 0.0;
  double alpha = 0.0;         // center vertex
  double gamma = 0.0;         // petal pendants; petal anchors are 1
  double mu_from_center = 0.0;  // 1 + alpha^{-(k-1)}
  double mu_from_anchor = 0.0;  // 2 + alpha + gamma^{k-1}
};

SunflowerParameters sunflower_parameters(unsigned k, double mu);

/// Positive signless eigenvector of sunflower(k) at mu from the parameters.
DenseVector sunflower_positive_vector(unsigned k, double mu);

/// Even k: root of sunflower_function on [2, 4] with its sign-flipped
/// Laplacian witness. Odd k: lambda = 2 with an anchor indicator.
SpectrumEntry sunflower_lambda_max(unsigned k, const SolverOptions& opts);

// ---- odd uniformity ----

struct OddFamilyResult {
  SpectrumEntry entry;          // lambda = 2 with a junction indicator
  double oracle_max = 0.0;      // largest Laplacian eigenvalue the oracle found
  std::size_t oracle_findings = 0;
  bool confirmed = false;       // oracle_max <= 2 + tol_struct
};

/// For odd-uniform hypercycles (s >= 2), hyperpaths (d >= 3) and
/// sunflowers: lambda(L) = 2 with a witness, plus an oracle sweep with
/// opts.restarts starts. The sweep is sampling evidence only.
OddFamilyResult odd_family_lambda_max(const UniformHypergraph& h, const SolverOptions& opts);

/// lambda = 1 with the indicator of the first edge's chosen cored vertex.
SpectrumEntry cored_lambda1(const UniformHypergraph& h, const SolverOptions& opts);

// ---- length-3 hyperpath and size-3 hypercycle, odd k ----

/// Case equations and the variants checked alongside them.
ScalarFunction hyperpath3_case2(unsigned k);            // (l-2)(1-l)^{k-1} + 1
ScalarFunction hyperpath3_case3(unsigned k);            // (l-2)^2 (1-l)^{k-2} - 1
ScalarFunction hyperpath3_case4(unsigned k);            // (l-2)^2 (1-l)^{k-1} + 2l - 3
ScalarFunction hyperpath3_symmetric_stated(unsigned k);     // [(l-2)(1-l)^{k-1}+1]^2 (1-l)^k - 1
ScalarFunction hyperpath3_symmetric_corrected(unsigned k);  // [(l-2)(1-l)^{k-1}+1]^2 - (1-l)^k

ScalarFunction hypercycle3_case2(unsigned k);            // (l-2)^2 (1-l)^{k-2} - 1
ScalarFunction hypercycle3_case3_stated(unsigned k);     // (l-2)^2 (1-l)^{k-2} - 2 * 4^{1/k}
ScalarFunction hypercycle3_case3_corrected(unsigned k);  // (l-2)^2 (1-l)^{k-2} - 2
/// [(l-2) + (sign sqrt(1-l))^{k-2}](2-l) * factor + 2, factor 1 (statement)
/// or 2 (derivation).
ScalarFunction hypercycle3_case4(unsigned k, int sign, double factor);

/// {0, 1, 2} plus certified roots of every case equation and variant. All
/// candidates are listed in `candidates`; uncertified ones also appear as
/// uncertified entries.
SpectrumReport hyperpath3_spectrum(unsigned k, const SolverOptions& opts);
SpectrumReport hypercycle3_spectrum(unsigned k, const SolverOptions& opts);

// ---- monotonicity in k ----

enum class MonotoneFamily { hyperstar, hypercycle };

struct MonotonicityResult {
  MonotoneFamily family = MonotoneFamily::hyperstar;
  std::size_t parameter = 0;      // d or s
  std::vector<unsigned> ks;
  std::vector<double> lambda_q;   // largest signless eigenvalue per k
  std::vector<double> lambda_l;   // largest Laplacian eigenvalue per k
  std::vector<double> iteration;  // power-iteration cross-check per k
  double min_gap = 0.0;           // smallest consecutive decrease
  bool strictly_decreasing = false;  // every decrease exceeds the margin
  bool above_degree = false;         // every value exceeds the maximum degree
  bool cross_checked = false;        // |closed form - iteration| <= 1e-8 throughout
};

/// Largest signless eigenvalue of hyperstar(k, d) or hypercycle(k, s) for each
/// k in `ks` (ascending, >= 3); equal to lambda(L) for even k. Hyperstars use
/// the largest root of the signless polynomial on (d, 2d], hypercycles the
/// power iteration.
MonotonicityResult monotonicity_check(MonotoneFamily family, std::size_t parameter, const std::vector<unsigned>& ks,
                                      const SolverOptions& opts, double margin = 1e-6);

std::string_view to_string(MonotoneFamily family) noexcept;

}  // namespace hyperlap
