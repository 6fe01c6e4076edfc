#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nil2/sbasis.hpp"
#include "nil2/scalar.hpp"

namespace nil2 {

// c(x^{t^k alpha0}, y^{t^k beta0})_t with alpha0 monic and gcd(alpha0, beta0) = 1.
struct CKeyPoly {
  Poly alpha0;
  Poly beta0;
  unsigned k = 0;
  friend bool operator==(const CKeyPoly&, const CKeyPoly&) = default;
};

// c(x^s, y^{beta_hat s})_t. Monomial{0} plays the role of the element 1.
struct CKeyField {
  SBasisElem s;
  RatFun beta_hat;
  friend bool operator==(const CKeyField&, const CKeyField&) = default;
};

// Uninterpreted c(u^g, u^h)_subscript; g and h are u-coordinates.
struct FormalCKey {
  std::vector<Scalar> g;
  std::vector<Scalar> h;
  Scalar subscript;
  friend bool operator==(const FormalCKey&, const FormalCKey&) = default;
};

using CKey = std::variant<CKeyPoly, CKeyField, FormalCKey>;

// Throws MixedVariants when the keys are of different kinds.
std::strong_ordering key_order(const CKey& a, const CKey& b);

struct CKeyLess {
  bool operator()(const CKey& a, const CKey& b) const { return key_order(a, b) < 0; }
};

// Display names of the u-generators, used when printing formal keys.
using GeneratorNames = std::vector<std::string>;

std::string key_to_string(const CKey& key, const GeneratorNames& names = {"x", "y"});

// Element of the free module D on c-commutator keys.
class DVector {
 public:
  using Terms = std::map<CKey, Scalar, CKeyLess>;

  explicit DVector(RingKind ring = RingKind::Z) : ring_(ring) {}
  static DVector single(RingKind ring, CKey key, Scalar coeff);

  RingKind ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const CKey& key, const Scalar& coeff);

  DVector& operator+=(const DVector& o);
  DVector& operator-=(const DVector& o);
  DVector operator-() const;
  friend DVector operator+(DVector a, const DVector& b) { return a += b; }
  friend DVector operator-(DVector a, const DVector& b) { return a -= b; }
  friend DVector operator*(const Scalar& c, const DVector& v);
  friend bool operator==(const DVector& a, const DVector& b);

 private:
  void check_ring(RingKind other) const;

  RingKind ring_;
  Terms terms_;
};

// "key: coeff" lines, or "(zero)".
std::string to_string(const DVector& v, const GeneratorNames& names = {"x", "y"});

struct PolyPair {
  Poly alpha0;
  Poly beta0;
  Poly gamma;
};

// alpha = gamma alpha0, beta = gamma beta0, alpha0 monic, gcd(alpha0, beta0) = 1.
PolyPair canonical_pair_poly(const Poly& alpha, const Poly& beta);

struct FieldPair {
  RatFun beta_hat;
  RatFun gamma;
};

FieldPair canonical_pair_field(const RatFun& alpha, const RatFun& beta);

}  // namespace nil2
