#pragma once

#include <stdexcept>
#include <string>

namespace scf {

enum class ErrorCode {
  MissingFace,
  IndexOutOfRange,
  UnsupportedOrder,
  DimensionMismatch,
  EigenFailure,
  EmptySpec,
  DomainMismatch,
  UnsupportedCombination,
  ZeroReference,
  NonPositiveRate,
  IncompleteMarket,
  SingularSystem,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// True for codes that signal bad input data rather than a numerical breakdown.
bool is_data_error(ErrorCode code);

}  // namespace scf
