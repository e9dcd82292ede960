#include "hyperlap/error.hpp"

namespace hyperlap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TrivialHypergraph: return "TrivialHypergraph";
    case ErrorCode::InvalidUniformity: return "InvalidUniformity";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidFamilyParameter: return "InvalidFamilyParameter";
    case ErrorCode::OddUniformity: return "OddUniformity";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotCored: return "NotCored";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotAnEigenpair: return "NotAnEigenpair";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::NonPositiveIterate: return "NonPositiveIterate";
    case ErrorCode::SignParityViolation: return "SignParityViolation";
    case ErrorCode::WrongRootForR: return "WrongRootForR";
    case ErrorCode::ChoiceCountMismatch: return "ChoiceCountMismatch";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::OddUniformityRequired: return "OddUniformityRequired";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

MaxIterationsError::MaxIterationsError(const std::string& what, double lower, double upper)
    : Error(ErrorCode::MaxIterations, what), lower_(lower), upper_(upper) {}

}  // namespace hyperlap
