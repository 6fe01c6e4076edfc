#pragma once

#include <stdexcept>
#include <string>

namespace nil2 {

enum class ErrorKind {
  MixedRings,
  DivisionByZero,
  NotInvertible,
  BothZero,
  FactorDegreeExceeded,
  LengthMismatch,
  SchemaMismatch,
  UnknownPreset,
  InvalidSchema,
  ZeroInput,
  MixedVariants,
  StrategyMismatch,
  BasisNotSpanning,
  SyntaxError,
  UnknownGenerator,
  ScalarNotInRing,
  NonIntegerInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based character position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, "at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nil2
