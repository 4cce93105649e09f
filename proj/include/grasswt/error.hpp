#pragma once

#include <stdexcept>
#include <string>

namespace grasswt {

// Every precondition violation carries one of these codes so callers (and
// tests) can react to the cause rather than parse message text.
enum class Errc {
    NonPrimeCharacteristic,
    DegreeZero,
    FieldTooLarge,
    MixedFields,
    DivisionByZero,
    BadCoefficients,
    AmbientMismatch,
    DegreeOverflow,
    WrongDegree,
    ZeroVector,
    NotDecomposable,
    AmbientTooSmall,
    NotDecomposableBasis,
    DependentInput,
    RankOverflow,
    DependentBasis,
    RankDeficient,
    InvalidDelta,
    NotInCode,
    BadFormat,
    EnumerationBudgetExceeded,
    SearchBudgetExceeded,
    Overflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace grasswt
