#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wog {

enum class ErrorCode {
    EmptyGenerators,
    UnitGenerator,
    ContextMismatch,
    EmptySet,
    NotAMember,
    ZeroIdeal,
    TooManyGenerators,
    InvalidMultidegree,
    TaylorNotMinimal,
    TrivialSplit,
    NotSquarefree,
    InvalidGraph,
    NoEdges,
    NotAnEdge,
    NotDominantPseudoForest,
    InvalidParameters,
    NTooLarge,
    NOutOfScope,
    UnknownTheorem,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::UnitGenerator: return "UnitGenerator";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::InvalidMultidegree: return "InvalidMultidegree";
    case ErrorCode::TaylorNotMinimal: return "TaylorNotMinimal";
    case ErrorCode::TrivialSplit: return "TrivialSplit";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotDominantPseudoForest: return "NotDominantPseudoForest";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::NOutOfScope: return "NOutOfScope";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wog
