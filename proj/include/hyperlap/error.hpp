#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlap {

enum class ErrorCode {
  // hypergraph model
  NonUniformEdge,
  DuplicateEdge,
  VertexOutOfRange,
  TrivialHypergraph,
  InvalidUniformity,
  InvalidGraph,
  InvalidFamilyParameter,
  OddUniformity,
  NotConnected,
  NotCored,
  // tensor evaluation
  DimensionMismatch,
  ZeroVector,
  NotAnEigenpair,
  // numerical kernels
  NoSignChange,
  MaxIterations,
  NonPositiveIterate,
  // catalogs
  SignParityViolation,
  WrongRootForR,
  ChoiceCountMismatch,
  FamilyMismatch,
  OddUniformityRequired,
  // oracle
  InstanceTooLarge,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an iteration exhausts its budget; carries the last bracket
// so callers can report how far the bounds got.
class MaxIterationsError : public Error {
 public:
  MaxIterationsError(const std::string& what, double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace hyperlap
