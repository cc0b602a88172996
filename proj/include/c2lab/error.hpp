#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c2lab {

enum class ErrorCode {
  SelfLoopContraction,
  NotConnected,
  NotPlanar,
  InvalidRange,
  UnknownFamily,
  BadParameter,
  IndexOverlap,
  BadIndices,
  NotSpanningTree,
  UnsupportedQ,
  BudgetExceeded,
  PreconditionUnmet,
  DivisibilityViolated,
  NotATriangle,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type; `code()` is the
/// machine-readable part that ends up in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace c2lab
