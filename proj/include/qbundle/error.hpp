#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbundle {

enum class ErrorKind {
  DivisionByZero,
  PoleAtPoint,
  ParseError,
  ValidationError,
  DegreeIncompatibleRelation,
  RuleCapExceeded,
  DegreeBoundExceeded,
  UnknownBuiltin,
  NoCoalgebraData,
  NoInverseAntipode,
  CoidealCheckFailed,
  ZeroClass,
  IncompatibleTargets,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure is reported through this exception; `kind()` is the
/// machine-readable part, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qbundle
