#include "piltz/error.hpp"

namespace piltz {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFundamental: return "NotFundamental";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::OverflowRisk: return "OverflowRisk";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::RangeExceeded: return "RangeExceeded";
        case ErrorCode::CacheMismatch: return "CacheMismatch";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
        case ErrorCode::PoleAt1: return "PoleAt1";
        case ErrorCode::NearSingularity: return "NearSingularity";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::EmptyTermList: return "EmptyTermList";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::TableTooShort: return "TableTooShort";
        case ErrorCode::NoAdmissibleWindow: return "NoAdmissibleWindow";
        case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::DegenerateFit: return "DegenerateFit";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::Io: return "Io";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

}  // namespace piltz
