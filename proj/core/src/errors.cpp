#include "chainconic/errors.hpp"

namespace chainconic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::TangentContact: return "TangentContact";
    case ErrorKind::NotOnCurves: return "NotOnCurves";
    case ErrorKind::CoincidentCurves: return "CoincidentCurves";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::DuplicateChainPoint: return "DuplicateChainPoint";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::DegenerateCenter: return "DegenerateCenter";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::FocusOnTangent: return "FocusOnTangent";
    case ErrorKind::NotInscribed: return "NotInscribed";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
  }
  return "Unknown";
}

bool is_degeneracy(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CoincidentPoints:
    case ErrorKind::DuplicatePoints:
    case ErrorKind::CollinearPoints:
    case ErrorKind::TangentContact:
    case ErrorKind::NotOnCurves:
    case ErrorKind::CoincidentCurves:
    case ErrorKind::DegenerateStep:
    case ErrorKind::DuplicateChainPoint:
    case ErrorKind::DegenerateCenter:
    case ErrorKind::DegenerateConic:
    case ErrorKind::FocusOnTangent:
    case ErrorKind::DegenerateDiagonal:
      return true;
    default:
      return false;
  }
}

GeometryError::GeometryError(ErrorKind kind, const std::string& what)
    : GeometryError(kind, what, std::nullopt) {}

GeometryError::GeometryError(ErrorKind kind, const std::string& what, std::optional<std::size_t> index,
                             std::optional<ErrorKind> cause, std::optional<double> residual)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      index_(index),
      cause_(cause),
      residual_(residual) {}

}  // namespace chainconic
