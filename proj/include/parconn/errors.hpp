#pragma once

#include <stdexcept>
#include <string>

namespace parconn {

// Stable machine-readable error names; the CLI prints name() verbatim.
enum class ErrorCode {
  DivisionByZero,
  ParseError,
  PoleOrderTooHigh,
  ZeroPolynomial,
  DimensionMismatch,
  InvalidSpectralData,
  NotHiggs,
  DirectionUndefined,
  NotSaturated,
  ChartViolation,
  NotCyclic,
  BadPoleSet,
  ZeroT,
  DegenerateLimit,
  ZeroSection,
  NodalUnsupported,
  NotOddModel,
  ReducibleInput,
  NodeCollision,
  DegenerateDivisor,
  InfinitePoleUnnormalized,
  NotSymmetric,
  BadSplitting,
  NonSplit,
  InvalidInput,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PoleOrderTooHigh: return "PoleOrderTooHigh";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSpectralData: return "InvalidSpectralData";
    case ErrorCode::NotHiggs: return "NotHiggs";
    case ErrorCode::DirectionUndefined: return "DirectionUndefined";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::ChartViolation: return "ChartViolation";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::BadPoleSet: return "BadPoleSet";
    case ErrorCode::ZeroT: return "ZeroT";
    case ErrorCode::DegenerateLimit: return "DegenerateLimit";
    case ErrorCode::ZeroSection: return "ZeroSection";
    case ErrorCode::NodalUnsupported: return "NodalUnsupported";
    case ErrorCode::NotOddModel: return "NotOddModel";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::NodeCollision: return "NodeCollision";
    case ErrorCode::DegenerateDivisor: return "DegenerateDivisor";
    case ErrorCode::InfinitePoleUnnormalized: return "InfinitePoleUnnormalized";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadSplitting: return "BadSplitting";
    case ErrorCode::NonSplit: return "NonSplit";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace parconn
