#include "firwb/error.hpp"

namespace firwb {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonInjectiveMap: return "NonInjectiveMap";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::DescentFailure: return "DescentFailure";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NoGoodPoint: return "NoGoodPoint";
    case ErrorKind::NonZeroObstruction: return "NonZeroObstruction";
    case ErrorKind::InconsistentFit: return "InconsistentFit";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::SyzygySearchExhausted: return "SyzygySearchExhausted";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

}  // namespace firwb
