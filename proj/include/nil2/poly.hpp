#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace nil2 {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Dense univariate polynomial in t over Q. Index = degree; the zero
// polynomial is the empty coefficient sequence.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}

  static Poly monomial(const Rational& c, unsigned k);
  static Poly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  std::size_t term_count() const;

  Poly monic() const;
  Poly derivative() const;
  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Quotient and remainder; throws DivisionByZero when b is zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Throws NotInvertible when b does not divide a.
  friend Poly exact_div(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Degree first, then coefficients from the constant term upwards.
std::strong_ordering compare(const Poly& a, const Poly& b);

Poly pow(const Poly& p, unsigned e);

// Monic gcd; throws BothZero when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Extended Euclid: returns (g, s, r) with s*a + r*b = g, g monic.
struct Bezout {
  Poly gcd, s, r;
};
Bezout poly_xgcd(const Poly& a, const Poly& b);

// a = scale * (integer polynomial with coprime coefficients and positive
// leading coefficient).
struct IntegerPoly {
  Rational scale;
  std::vector<Integer> coeffs;
};
IntegerPoly primitive_part(const Poly& a);
Poly from_integers(const std::vector<Integer>& coeffs);

// Lowest common denominator of the coefficients (1 for the zero polynomial).
Integer common_denominator(const Poly& a);

// Prints an integer-coefficient polynomial in the scalar literal syntax.
std::string format_integer_poly(const std::vector<Integer>& coeffs);

}  // namespace nil2
