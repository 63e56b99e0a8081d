#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lagblow {

enum class ErrorKind {
  NonIntegerExponent,
  NotAComplex,
  NoClasses,
  NegativeMultiplicity,
  BadExponent,
  DimensionMismatch,
  NotAdmissible,
  NotDimensionFour,
  BadIndex,
  InputError,
  ParseError,
  ValidationError,
  UnknownExample,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is an Error carrying its kind and, for
// validation-style failures, one diagnostic per offending item.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> diagnostics = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
  ErrorKind kind_;
  std::vector<std::string> diagnostics_;
};

}  // namespace lagblow
