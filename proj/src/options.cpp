#include "hyperlap/options.hpp"

#include "hyperlap/error.hpp"

namespace hyperlap {

void SolverOptions::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw Error(ErrorCode::InvalidFamilyParameter, std::string(name) + " must be positive");
  };
  positive(tol_root, "tol_root");
  positive(tol_iter, "tol_iter");
  positive(tol_residual, "tol_residual");
  positive(tol_struct, "tol_struct");
  if (max_iter < 1) throw Error(ErrorCode::InvalidFamilyParameter, "max_iter must be at least 1");
  if (restarts < 1) throw Error(ErrorCode::InvalidFamilyParameter, "restarts must be at least 1");
}

}  // namespace hyperlap
