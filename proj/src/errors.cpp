#include "jetlin/errors.hpp"

namespace jetlin {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonUnitDivisor: return "NonUnitDivisor";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::OrderIncrease: return "OrderIncrease";
    case Errc::SingularLinearPart: return "SingularLinearPart";
    case Errc::InexactCoefficients: return "InexactCoefficients";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ParameterLengthMismatch: return "ParameterLengthMismatch";
    case Errc::UnclassifiableSpectrum: return "UnclassifiableSpectrum";
    case Errc::SpectrumUnsupported: return "SpectrumUnsupported";
    case Errc::NotLinearizable: return "NotLinearizable";
    case Errc::FamilyObstructed: return "FamilyObstructed";
    case Errc::TorsionMismatch: return "TorsionMismatch";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotEigendirection: return "NotEigendirection";
    case Errc::ValuationTooLow: return "ValuationTooLow";
    case Errc::RootOfUnityLambda: return "RootOfUnityLambda";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::EmptyCertificate: return "EmptyCertificate";
    case Errc::IoError: return "IoError";
    case Errc::UnknownVerb: return "UnknownVerb";
  }
  return "UnknownError";
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::IoError:
    case Errc::UnknownVerb:
    case Errc::InvariantViolation:
    case Errc::ParameterLengthMismatch:
    case Errc::DimensionMismatch:
    case Errc::DegreeOutOfRange:
    case Errc::OrderIncrease:
      return true;
    default:
      return false;
  }
}

}  // namespace jetlin
