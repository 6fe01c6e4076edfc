#include "nil2/error.hpp"

namespace nil2 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::FactorDegreeExceeded: return "FactorDegreeExceeded";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InvalidSchema: return "InvalidSchema";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::MixedVariants: return "MixedVariants";
    case ErrorKind::StrategyMismatch: return "StrategyMismatch";
    case ErrorKind::BasisNotSpanning: return "BasisNotSpanning";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ScalarNotInRing: return "ScalarNotInRing";
    case ErrorKind::NonIntegerInput: return "NonIntegerInput";
  }
  return "Unknown";
}

}  // namespace nil2
