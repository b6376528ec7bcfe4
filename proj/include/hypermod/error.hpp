#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypermod {

enum class ErrorCode {
    UnsupportedDegree,
    InternalModulusError,
    DivisionByZero,
    InvalidArgument,
    NonSquareMatrix,
    DimensionMismatch,
    InvalidSpec,
    GroupTooLarge,
    NotASubgroupElement,
    NotAHomomorphism,
    ZeroModule,
    NotSimpleInput,
    NoSymplecticForm,
    DegenerateForm,
    NotSymmetric,
    NotInvariant,
    ConstructionFailed,
    MismatchedContext,
    LengthTooLarge,
    OddLength,
    MeatAxeFailure,
    CriteriaDisagree,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorCode::InternalModulusError: return "InternalModulusError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::NotASubgroupElement: return "NotASubgroupElement";
        case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorCode::ZeroModule: return "ZeroModule";
        case ErrorCode::NotSimpleInput: return "NotSimpleInput";
        case ErrorCode::NoSymplecticForm: return "NoSymplecticForm";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::MismatchedContext: return "MismatchedContext";
        case ErrorCode::LengthTooLarge: return "LengthTooLarge";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::MeatAxeFailure: return "MeatAxeFailure";
        case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hypermod
