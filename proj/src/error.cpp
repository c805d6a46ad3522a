#include "twinwalk/error.hpp"

namespace twinwalk {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::EqualVertices: return "EqualVertices";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::TwinViolation: return "TwinViolation";
        case ErrorCode::AsymmetricSet: return "AsymmetricSet";
        case ErrorCode::ContainsZero: return "ContainsZero";
        case ErrorCode::NotProperDivisor: return "NotProperDivisor";
        case ErrorCode::OddModulus: return "OddModulus";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::SizeNotMultipleOf4: return "SizeNotMultipleOf4";
        case ErrorCode::NotIntegral: return "NotIntegral";
        case ErrorCode::NotTwins: return "NotTwins";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::WitnessFailed: return "WitnessFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace twinwalk
