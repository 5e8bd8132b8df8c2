#include "sympcheck/error.hpp"

namespace sympcheck {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::UnitMissing: return "UnitMissing";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::UnknownBasisName: return "UnknownBasisName";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::MixedAlgebras: return "MixedAlgebras";
    case ErrorCode::TopDegreeNotOneDimensional: return "TopDegreeNotOneDimensional";
    case ErrorCode::DualityFailure: return "DualityFailure";
    case ErrorCode::DimensionNotMultipleOfFour: return "DimensionNotMultipleOfFour";
    case ErrorCode::OddTopDegree: return "OddTopDegree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::ListTooShort: return "ListTooShort";
    case ErrorCode::HypothesesNotEstablished: return "HypothesesNotEstablished";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace sympcheck
