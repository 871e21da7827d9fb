#pragma once

#include <stdexcept>
#include <string>

namespace firwb {

enum class ErrorKind {
  ZeroDenominator,
  NonInjectiveMap,
  DenominatorVanishes,
  ObjectMismatch,
  InvalidLabel,
  LevelTooSmall,
  DescentFailure,
  NotACocycle,
  NoGoodPoint,
  NonZeroObstruction,
  InconsistentFit,
  DependentBasis,
  CertificateFailure,
  DegreeBoundExceeded,
  SyzygySearchExhausted,
  InvalidInput,
  ParseError,
  FieldMismatch,
};

/// Stable identifier used on the command line and in JSON error payloads.
const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace firwb
