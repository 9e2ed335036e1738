#pragma once

#include <stdexcept>
#include <string>

namespace wittsum {

enum class Err {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  CapExceeded,
  RingMismatch,
  LevelOutOfRange,
  TraceNotRational,
  NotPrimeField,
  DimensionDeficient,
  EnumerationBudgetExceeded,
  IdentityViolation,
  UnsupportedDimension,
  NegativeExponentInJ,
  FaceContainsOrigin,
  BudgetExceeded,
  NotPolynomial,
  NonIntegralCoefficient,
  Inconclusive,
  SchemaError,
  ConstantFirstCoordinate,
  PrimalityError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::CapExceeded: return "CapExceeded";
    case Err::RingMismatch: return "RingMismatch";
    case Err::LevelOutOfRange: return "LevelOutOfRange";
    case Err::TraceNotRational: return "TraceNotRational";
    case Err::NotPrimeField: return "NotPrimeField";
    case Err::DimensionDeficient: return "DimensionDeficient";
    case Err::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case Err::IdentityViolation: return "IdentityViolation";
    case Err::UnsupportedDimension: return "UnsupportedDimension";
    case Err::NegativeExponentInJ: return "NegativeExponentInJ";
    case Err::FaceContainsOrigin: return "FaceContainsOrigin";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotPolynomial: return "NotPolynomial";
    case Err::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Err::Inconclusive: return "Inconclusive";
    case Err::SchemaError: return "SchemaError";
    case Err::ConstantFirstCoordinate: return "ConstantFirstCoordinate";
    case Err::PrimalityError: return "PrimalityError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace wittsum
