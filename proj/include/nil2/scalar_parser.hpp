#pragma once

#include <cstddef>
#include <string_view>

#include "nil2/scalar.hpp"

namespace nil2 {

// Scalar literal grammar:
//   sum  := ["+"|"-"] prod { ("+"|"-") prod }
//   prod := pow { ("*"|"/") pow }
//   pow  := atom [ "^" ["-"] integer ]
//   atom := integer | "t" | "(" sum ")"
// Division by a non-constant (and negative powers of one) are accepted
// only over Q(t). U+2212 is accepted as a minus sign.
Scalar parse_scalar(std::string_view text, RingKind ring);

enum class ScalarForm {
  Sum,
  // Exponent position inside words: "(" sum ")" | "{" sum "}" |
  // ["-"] integer ["/" integer] | ["-"] "t".
  ExponentAtom,
};

// Reads one scalar starting at pos (0-based) and advances pos past it.
// Error positions are reported 1-based within text.
Scalar read_scalar(std::string_view text, std::size_t& pos, RingKind ring, ScalarForm form);

}  // namespace nil2
