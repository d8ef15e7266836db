#pragma once

#include <stdexcept>
#include <string>

namespace ellwall {

enum class ErrorCode {
  DimensionMismatch,
  Validation,
  UnknownFiber,
  NonPositiveDenominator,
  PreconditionViolated,
  GcdViolation,
  NonIntegral,
  ZeroRank,
  NotSpherical,
  ZeroVector,
  NonIntegralLength,
  NegativeLength,
  InvalidWallClass,
  InvariantViolation,
  UnrepresentableSlope,
  BadDeterminant,
  NotCoprime,
  LengthTooSmall,
  NonNegativeInput,
  Pole,
  BoundaryInput,
  ZeroClass,
  InconsistentHodge,
  Parse,
};

const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ellwall
