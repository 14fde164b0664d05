#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hf {

enum class ErrorKind {
  NegativeInput,
  ZeroPivot,
  HeronViolation,
  NotPerfectSquare,
  OrderMismatch,
  OrderTooSmall,
  ConditionViolated,
  NonGenericH,
  NotADiagonal,
  InTriangulation,
  InvalidTriple,
  NotInTriangulation,
  NotThin,
  NotNormalized,
  InvalidVertex,
  WindowTooNarrow,
  Degenerate,
  IncoherentInput,
  IndexRange,
  NonIntegral,
  InvalidTarget,
  MissingSymbol,
  MalformedInput,
};

std::string_view error_kind_name(ErrorKind kind);

// Domain error. `position` names the offending node, line, vertex or path
// index in its wire format, or is empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string position = {}, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::string position_;
};

}  // namespace hf
