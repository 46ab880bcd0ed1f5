#include "optrig/errors.hpp"

namespace optrig {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::ZeroRelativeOperator: return "ZeroRelativeOperator";
    case ErrorKind::NotAccretive: return "NotAccretive";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::ZeroImage: return "ZeroImage";
    case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
  }
  return "Unknown";
}

bool is_precondition(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ZeroOperator:
    case ErrorKind::ZeroRelativeOperator:
    case ErrorKind::NotAccretive:
    case ErrorKind::SingularOperator:
    case ErrorKind::ZeroImage:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace optrig
