#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nil2/tensor.hpp"

namespace nil2 {

struct RWord;
using RWordPtr = std::shared_ptr<const RWord>;

// Group R-word. Gen refers to u_index (or v_index when central is set).
struct RWord {
  enum class Kind { Identity, Gen, Mul, Inv, Exp, Comm, CComm };

  Kind kind = Kind::Identity;
  int index = 0;
  bool central = false;
  std::vector<RWordPtr> args;
  Scalar scalar;

  static RWordPtr identity();
  static RWordPtr gen(int index, bool central = false);
  static RWordPtr mul(std::vector<RWordPtr> factors);
  static RWordPtr inv(RWordPtr w);
  static RWordPtr exp(RWordPtr w, Scalar s);
  static RWordPtr comm(RWordPtr g, RWordPtr h);
  static RWordPtr ccomm(RWordPtr g, RWordPtr h, Scalar s);
};

// word   := factor { ["*"] factor }
// factor := atom [ "^" scalar-atom ]
// atom   := name | "1" | "(" word ")" | "[" word "," word "]"
//         | "c(" word "," word ")_" scalar-atom
// Names are x, y (two-generator schemas), u<i> and v<j>. Throws ParseError
// with kind SyntaxError, UnknownGenerator or ScalarNotInRing.
RWordPtr parse_word(std::string_view text, const GroupSchema& schema, RingKind ring);

TensorElement eval(const RWordPtr& w, const CReductionStrategy& strategy);

// Text in the word grammar that parses back to an equivalent word.
std::string to_string(const RWordPtr& w, const GroupSchema& schema);

// x^{A} y^{B} [y,x]^{C} * c(...)_t^{Q} ...; "1" for the identity.
std::string print_normal_form(const TensorElement& g);

}  // namespace nil2
