#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quillen {

/// Failure categories surfaced by the library. The CLI maps each one to an
/// exit code (see cli.hpp).
enum class ErrorKind {
  NotAUnit,
  RingMismatch,
  NotMonic,
  ShapeError,
  NotUnimodular,
  ResourceExceeded,
  NotProper,
  SearchExhausted,
  NotLocalUnit,
  NoMonicEntry,
  NotUnimodularLocally,
  RowTooShort,
  NormalizationExhausted,
  DenominatorsNotComaximal,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Internal invariant check; violations are bugs, never user errors.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvariantViolation, what);
}

}  // namespace quillen
