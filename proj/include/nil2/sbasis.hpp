#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>

#include "nil2/factor.hpp"
#include "nil2/ratfun.hpp"
#include "nil2/scalar.hpp"

namespace nil2 {

// t^k, k >= 0.
struct Monomial {
  unsigned k = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// t^j / p^m with p monic irreducible, m >= 1 and j < deg p.
struct SimpleFraction {
  Poly p;
  unsigned m = 1;
  unsigned j = 0;
  friend bool operator==(const SimpleFraction&, const SimpleFraction&) = default;
};

// Element of the additive Q-basis of Q(t): monomials and simple fractions.
using SBasisElem = std::variant<Monomial, SimpleFraction>;

// Monomials before simple fractions; monomials by k; fractions by (p, m, j).
std::strong_ordering compare(const SBasisElem& a, const SBasisElem& b);

struct SBasisLess {
  bool operator()(const SBasisElem& a, const SBasisElem& b) const { return compare(a, b) < 0; }
};

using SBasisMap = std::map<SBasisElem, Rational, SBasisLess>;

RatFun value(const SBasisElem& s);
std::string to_string(const SBasisElem& s);

struct PartialFractions {
  Poly polynomial_part;
  SBasisMap terms;  // simple fractions only
};

PartialFractions partial_fractions(const RatFun& f, int max_deg = kDefaultFactorDegreeBound);

// Sum of polynomial part and all terms.
RatFun recombine(const PartialFractions& pf);
RatFun recombine(const SBasisMap& terms);

// Coordinates of a in the standard additive basis: monomials for Q[t] (and
// constants of Z, Q), monomials plus simple fractions for Q(t).
SBasisMap additive_decompose(const Scalar& a, int max_deg = kDefaultFactorDegreeBound);

}  // namespace nil2
