#pragma once

#include <stdexcept>
#include <string>

namespace reesmult {

enum class Errc {
    // ring / ideal construction
    NonCoprimeSemigroup,
    EmptySpec,
    UnitGenerator,
    InvalidMonomial,
    RingMismatch,
    ZeroPower,
    // lengths and containment
    NotContained,
    NotMPrimary,
    // multiplicity engine
    QOutOfRange,
    StabilizationFailure,
    NonIntegralResult,
    GuardExceeded,
    OracleMismatch,
    // reductions
    ElementNotInIdeal,
    NotParameterSystem,
    // reduction-equation checker
    InhomogeneousGenerator,
    BoxTooLarge,
    // cache / io
    IoError,
    FormatError,
    CacheInconsistency,
    // parser / frontend
    SyntaxError,
    UndeclaredRing,
    UndeclaredIdeal,
    DuplicateName,
    ArityMismatch,
    UsageError,
    Overflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace reesmult
