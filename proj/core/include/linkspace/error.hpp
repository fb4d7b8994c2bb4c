#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkspace {

enum class ErrorCode {
  ParseError,
  Overflow,
  NonPositiveLength,
  ViolatesPolygonInequality,
  NonGeneric,
  EmptySubset,
  NotAPartition,
  InvalidArity,
  GroundSetMismatch,
  TooCoarse,
  UnsupportedArity,
  ArityMismatch,
  UnsupportedDimension,
  OffHyperplane,
  NotACycle,
  NotAClosedSurface,
  NotClosed,
  UnsupportedFormat,
  IoFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors that mean an internal invariant broke, as opposed to bad input.
  bool is_invariant_violation() const noexcept {
    return code_ == ErrorCode::NotACycle || code_ == ErrorCode::NotAClosedSurface ||
           code_ == ErrorCode::NotClosed;
  }

 private:
  ErrorCode code_;
};

}  // namespace linkspace
