#include "wq/error.hpp"

namespace wq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDate: return "MalformedDate";
    case ErrorCode::InvalidDate: return "InvalidDate";
    case ErrorCode::DuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooFewKnots: return "TooFewKnots";
    case ErrorCode::NegativeLambda: return "NegativeLambda";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DuplicateKnots: return "DuplicateKnots";
    case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InsufficientPairs: return "InsufficientPairs";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::StationMismatch: return "StationMismatch";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::EmptyPlot: return "EmptyPlot";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace wq
