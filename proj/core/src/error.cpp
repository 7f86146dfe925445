#include "polyreal/error.hpp"

namespace polyreal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::MultiplicityNotOne: return "MultiplicityNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::StringCFailed: return "StringCFailed";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polyreal
