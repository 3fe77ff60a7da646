#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wq {

enum class ErrorCode {
  MalformedDate,
  InvalidDate,
  DuplicateTimestamp,
  EmptySeries,
  ZeroPivot,
  RankDeficient,
  DimensionMismatch,
  TooFewKnots,
  NegativeLambda,
  UnsupportedOrder,
  DuplicateKnots,
  ResolutionTooSmall,
  DegenerateSpan,
  DegreeTooHigh,
  InsufficientData,
  InsufficientPairs,
  ZeroVariance,
  StationMismatch,
  GridMismatch,
  InvalidSpec,
  HeaderMismatch,
  MalformedRow,
  MalformedNumber,
  UnknownParameter,
  EmptyPlot,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wq
