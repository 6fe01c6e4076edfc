#include "nil2/ratfun.hpp"

#include "nil2/error.hpp"

namespace nil2 {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den.is_constant()) {
    Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  Rational inv = 1 / den.lead();
  num_ = num * inv;
  den_ = den * inv;
}

RatFun RatFun::reduced(Poly num, Poly den) {
  RatFun r;
  const Rational inv = 1 / den.lead();
  r.num_ = num * inv;
  r.den_ = den * inv;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return RatFun::reduced(den_, num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  if (b.is_polynomial()) return RatFun::reduced(a.num_ + b.num_ * a.den_, a.den_);
  if (a.is_polynomial()) return RatFun::reduced(b.num_ + a.num_ * b.den_, b.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
  if (a.is_zero() || b.is_zero()) return RatFun();
  const Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
  return RatFun::reduced(exact_div(a.num_, g1) * exact_div(b.num_, g2), exact_div(a.den_, g2) * exact_div(b.den_, g1));
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

std::strong_ordering compare(const RatFun& a, const RatFun& b) {
  if (auto c = compare(a.num(), b.num()); c != 0) return c;
  return compare(a.den(), b.den());
}

namespace {

bool is_bare_power(const std::vector<Integer>& c) {
  // 1, t or t^k: needs no parentheses as a divisor.
  std::size_t nonzero = 0;
  for (const auto& v : c) nonzero += v != 0;
  return nonzero == 1 && c.back() == 1;
}

}  // namespace

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  Integer l = 1;
  mpz_lcm(l.get_mpz_t(), common_denominator(num_).get_mpz_t(), common_denominator(den_).get_mpz_t());
  Integer g = 0;
  auto scaled = [&](const Poly& p) {
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) {
      out.push_back(c.get_num() * (l / c.get_den()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    return out;
  };
  auto n = scaled(num_);
  auto d = scaled(den_);
  for (auto& v : n) v /= g;
  for (auto& v : d) v /= g;
  std::string ns = format_integer_poly(n);
  std::string ds = format_integer_poly(d);
  if (num_.term_count() > 1) ns = "(" + ns + ")";
  if (!is_bare_power(d)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace nil2
