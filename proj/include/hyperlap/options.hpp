#pragma once

#include <cstddef>
#include <cstdint>

namespace hyperlap {

/// Tolerances and budgets shared by every numerical routine.
struct SolverOptions {
  double tol_root = 1e-12;      // bisection bracket width
  double tol_iter = 1e-10;      // power-iteration bound gap
  double tol_residual = 1e-9;   // eigenpair acceptance
  double tol_struct = 1e-8;     // structural predicates
  std::size_t max_iter = 100'000;
  std::uint64_t seed = 42;
  std::size_t restarts = 500;

  /// Throws Error(InvalidFamilyParameter) if a tolerance is not positive or a
  /// budget is zero.
  void validate() const;
};

}  // namespace hyperlap
