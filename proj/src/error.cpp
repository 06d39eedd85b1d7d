#include "scf/error.hpp"

namespace scf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::IncompleteMarket: return "IncompleteMarket";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool is_data_error(ErrorCode code) {
  return code != ErrorCode::EigenFailure && code != ErrorCode::SingularSystem;
}

}  // namespace scf
