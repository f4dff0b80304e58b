#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twolevel {

enum class ErrorKind {
  BadInput,
  EmptyInput,
  DimensionGuardExceeded,
  SizeGuardExceeded,
  Unbounded,
  Infeasible,
  InvalidPair,
  OriginNotInterior,
  DimensionMismatch,
  NonInjectiveOnHull,
  NotPerfect,
  BadParams,
  NotStable,
  NameClash,
  SharedElementInvalid,
  Disconnected,
  NonBinaryIntegerPoints,
  NotReduced,
  UnknownId,
  AssertionFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Internal consistency check that stays on in release builds. The library
/// cross-validates combinatorial formulas against geometry, and a mismatch is
/// a reportable result, not undefined behaviour.
inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::AssertionFailed, what);
}

}  // namespace twolevel
