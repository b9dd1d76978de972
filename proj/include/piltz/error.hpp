#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace piltz {

enum class ErrorCode {
    // field_core
    NotFundamental,
    NotMonic,
    Reducible,
    DegreeTooSmall,
    NotPrime,
    InvalidField,
    // coeff_sieve
    OverflowRisk,
    LengthMismatch,
    RangeExceeded,
    CacheMismatch,
    // analytic_engine
    Unsupported,
    NonConvergence,
    InsufficientTruncation,
    PoleAt1,
    NearSingularity,
    EmptyGrid,
    QuadratureFailure,
    // bounds_lab
    NotAGroup,
    NotASubgroup,
    EmptyTermList,
    InvalidRange,
    RangeViolation,
    TableTooShort,
    NoAdmissibleWindow,
    CoefficientOutOfRange,
    // experiment_cli
    InsufficientPoints,
    DegenerateFit,
    InvalidConfig,
    Io,
    // shared
    PreconditionViolated,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code identifies the
/// contract violation; the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) fail(code, what);
}

}  // namespace piltz
