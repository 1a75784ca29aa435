#pragma once

#include <stdexcept>
#include <string>

namespace jetlin {

// Every failure the library can signal on purpose.  Codes are stable API:
// the CLI maps them to exit codes and the python layer re-raises them by name.
enum class Errc {
  DivisionByZero,
  NonUnitDivisor,
  DimensionMismatch,
  DegreeOutOfRange,
  OrderIncrease,
  SingularLinearPart,
  InexactCoefficients,
  ParseError,
  InvariantViolation,
  ParameterLengthMismatch,
  UnclassifiableSpectrum,
  SpectrumUnsupported,
  NotLinearizable,
  FamilyObstructed,
  TorsionMismatch,
  PreconditionFailed,
  NotEigendirection,
  ValuationTooLow,
  RootOfUnityLambda,
  PrecisionTooLow,
  PrecisionExhausted,
  EmptyCertificate,
  IoError,
  UnknownVerb,
};

const char* errc_name(Errc code);

// Exit-code policy: malformed input (files, flags, shapes) is a usage
// problem; everything else is a domain failure of the requested operation.
bool is_usage_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool ok, Errc code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace jetlin
