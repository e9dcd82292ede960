#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

/// Index i holds the coordinate of vertex i (0-based).
using DenseVector = std::vector<double>;

enum class TensorKind { adjacency, laplacian, signless };

std::string_view to_string(TensorKind kind) noexcept;
TensorKind tensor_kind_from_string(std::string_view name);

/// x^p by repeated squaring.
double ipow(double x, unsigned p) noexcept;

/// T x^{k-1} evaluated edge by edge; the order-k tensor is never formed.
///
/// Each incident edge contributes the product of its other k-1 coordinates
/// (the 1/(k-1)! entries sum over the (k-1)! orderings). Products are taken in
/// ascending vertex order via prefix/suffix scans, O(k) per edge.
DenseVector apply(const UniformHypergraph& h, TensorKind kind, std::span<const double> x);

/// max_i |lambda x_i^{k-1} - (T x^{k-1})_i| at the unit infinity-norm
/// representative of x.
double residual(const UniformHypergraph& h, TensorKind kind, double lambda, std::span<const double> x);

double inf_norm(std::span<const double> x) noexcept;
DenseVector normalized(std::span<const double> x);

struct EigenPair {
  double lambda = 0.0;
  DenseVector x;
  TensorKind kind = TensorKind::laplacian;
  double residual = 0.0;
};

/// Builds a pair with its residual recomputed from the fields.
EigenPair make_eigenpair(const UniformHypergraph& h, TensorKind kind, double lambda, DenseVector x);

struct CheckResult {
  std::string name;
  bool applicable = false;
  bool passed = true;
  double worst = 0.0;   // largest violation seen (0 when none)
  std::string detail;
};

struct StructuralReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t applicable_count() const;
};

/// Eigenvector structure predicates for Laplacian eigenpairs of cored and
/// power-shaped hypergraphs:
///   cored-equal-magnitude: lambda != 1, two cored vertices of one edge have
///     equal |x| (equal x for odd k);
///   edge-product-sign: lambda >= 1, prod over e (even k) or over e minus its
///     cored vertex (odd k) is <= 0;
///   cored-intersection-relation: odd k, lambda != 1, power-shaped edge with a
///     nonzero cored value x_s: x_i = (1-lambda) x_s for one intersectional
///     vertex, x_i x_j = (1-lambda) x_s^2 for two;
///   intersection-sign: odd k, lambda > 1, same edges: x_i x_s < 0 or
///     x_i x_j < 0.
/// Checks whose hypotheses fail are listed with applicable = false. The pair
/// must already satisfy residual <= tol_residual.
StructuralReport structural_checks(const UniformHypergraph& h, const EigenPair& pair, double tol_struct,
                                   double tol_residual);

}  // namespace hyperlap
