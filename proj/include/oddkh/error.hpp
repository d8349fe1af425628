#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddkh {

enum class ErrorKind {
  MalformedToken,
  ArcCountViolation,
  OrientationInconsistent,
  NonPlanar,
  InvalidBasepoint,
  NotAnEdge,
  NotAFace,
  ClassificationInconsistent,
  MismatchedCircleSets,
  InvalidRelabeling,
  InvalidBifurcation,
  DuplicateCircle,
  CannotRemovePointed,
  NotABijection,
  Unsolvable,
  DifferentialNotSquareZero,
  FiltrationViolated,
  NotAntiChain,
  ShapeMismatch,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every module reports failures through this type; `kind()` is stable and is
/// what the CLI serializes into its error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oddkh
