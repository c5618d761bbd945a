#pragma once

#include <stdexcept>
#include <string>

namespace helgason {

enum class ErrorKind {
  DimensionMismatch,
  IsotropicRoot,
  UnknownRoot,
  SingularRoot,
  NotLinearlyIndependent,
  SpanViolation,
  UnclassifiablePattern,
  InvalidSystem,
  ParameterViolation,
  UnknownFamily,
  RegularRootNotTransportable,
  NotCritical,
  NotFound,
  NotFullyReflectable,
  NotSimple,
  WrongArity,
  Parse,
  Precondition,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the C API can map it
// onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace helgason
