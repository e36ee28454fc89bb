#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chainconic {

enum class ErrorKind {
  InvalidArgument,
  CoincidentPoints,
  DuplicatePoints,
  CollinearPoints,
  TangentContact,
  NotOnCurves,
  CoincidentCurves,
  InvalidConfiguration,
  DegenerateStep,
  DuplicateChainPoint,
  NotClosed,
  DegenerateCenter,
  DegenerateConic,
  FocusOnTangent,
  NotInscribed,
  WrongArity,
  DegenerateDiagonal,
  ExhaustedRetries,
  UnknownScenario,
};

std::string_view to_string(ErrorKind kind);

// True for errors that describe a degenerate geometric input rather than a
// failed theorem check or a malformed request.
bool is_degeneracy(ErrorKind kind);

// Single exception type for the library. `index` is 1-based (chain step,
// polygon side) when present; `cause` carries the wrapped kernel error for
// DegenerateStep; `residual` carries the offending measure for NotInscribed.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what);
  GeometryError(ErrorKind kind, const std::string& what, std::optional<std::size_t> index,
                std::optional<ErrorKind> cause = std::nullopt, std::optional<double> residual = std::nullopt);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }
  [[nodiscard]] std::optional<ErrorKind> cause() const noexcept { return cause_; }
  [[nodiscard]] std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
  std::optional<ErrorKind> cause_;
  std::optional<double> residual_;
};

}  // namespace chainconic
