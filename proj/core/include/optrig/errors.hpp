#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace optrig {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  ZeroOperator,
  ZeroRelativeOperator,
  NotAccretive,
  SingularOperator,
  ZeroImage,
  NonFiniteObjective,
  WitnessNotFound,
  RouteDisagreement,
};

std::string_view kind_name(ErrorKind kind);

// Domain refusals (the inputs violate an operation's precondition) versus
// numerical self-check failures. The CLI maps these onto exit codes 2 and 3.
bool is_precondition(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace optrig
