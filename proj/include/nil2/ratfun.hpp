#pragma once

#include <string>

#include "nil2/poly.hpp"

namespace nil2 {

// Element of Q(t) kept reduced with a monic denominator, so equality is
// structural.
class RatFun {
 public:
  RatFun() : den_(1) {}
  explicit RatFun(Poly num) : num_(std::move(num)), den_(1) {}
  // Throws DivisionByZero when den is zero.
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  RatFun inverse() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun&, const RatFun&) = default;

  std::string to_string() const;

 private:
  // num and den already coprime.
  static RatFun reduced(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

// Numerator first, then denominator, each by compare(Poly, Poly).
std::strong_ordering compare(const RatFun& a, const RatFun& b);

}  // namespace nil2
