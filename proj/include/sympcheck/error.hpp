#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympcheck {

enum class ErrorCode {
    UnitMissing,
    DegreeOutOfRange,
    UnknownBasisName,
    ValidationFailure,
    MixedAlgebras,
    TopDegreeNotOneDimensional,
    DualityFailure,
    DimensionNotMultipleOfFour,
    OddTopDegree,
    DimensionMismatch,
    DimensionTooLow,
    UnknownCatalogEntry,
    InvalidLattice,
    ListTooShort,
    HypothesesNotEstablished,
    OddDimension,
    DimensionOutOfRange,
    SyntaxError,
    NonPositiveExponent,
    UnknownAtom,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    /// Message without the error-code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace sympcheck
