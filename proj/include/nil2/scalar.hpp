#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nil2/poly.hpp"
#include "nil2/ratfun.hpp"

namespace nil2 {

enum class RingKind { Z, Q, QtPoly, QtField };

enum class AdditiveBasisKind { None, Monomials, PartialFractions };

struct RingDescriptor {
  RingKind kind;
  bool has_gcd;
  bool is_field;
  AdditiveBasisKind additive_basis_kind;
};

RingDescriptor describe(RingKind kind);
std::string_view ring_name(RingKind kind);
// Accepts "Z", "Q", "Q[t]", "Q(t)".
std::optional<RingKind> parse_ring_name(std::string_view name);

// An exact element of one of the supported binomial domains. The variant
// alternative is the ring tag; mixing tags in arithmetic throws MixedRings.
class Scalar {
 public:
  using Value = std::variant<Integer, Rational, Poly, RatFun>;

  Scalar() : v_(Integer(0)) {}
  Scalar(RingKind kind, long value);

  static Scalar zero(RingKind kind) { return Scalar(kind, 0); }
  static Scalar one(RingKind kind) { return Scalar(kind, 1); }
  // The ring generator t; ScalarNotInRing over Z and Q.
  static Scalar t(RingKind kind);
  // Embeds a value of a larger ring, throwing ScalarNotInRing if it does
  // not belong to the target ring.
  static Scalar from_rational(RingKind kind, const Rational& q);
  static Scalar from_poly(RingKind kind, const Poly& p);
  static Scalar from_ratfun(RingKind kind, const RatFun& f);

  RingKind kind() const { return static_cast<RingKind>(v_.index()); }
  const Value& value() const { return v_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  // Exact division: a field division, or an exact quotient in Z and Q[t].
  // DivisionByZero for b = 0, NotInvertible when the quotient leaves the ring.
  friend Scalar divide(const Scalar& a, const Scalar& b);
  Scalar inverse() const;
  bool is_invertible() const;

  // Image in Q(t); every supported ring embeds there.
  RatFun to_ratfun() const;
  // Scalar multiplication by a rational; ScalarNotInRing over Z for
  // non-integers.
  Scalar scaled(const Rational& q) const;

  std::string to_string() const;

 private:
  explicit Scalar(Value v) : v_(std::move(v)) {}
  Value v_;
};

std::strong_ordering compare(const Scalar& a, const Scalar& b);

// Some(r) iff a is a constant lying in Q ∩ R.
std::optional<Rational> as_rational(const Scalar& a);

// a (a-1) ... (a-k+1) / k!
Scalar binomial(const Scalar& a, unsigned k);

}  // namespace nil2
