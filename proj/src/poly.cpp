#include "nil2/poly.hpp"

#include <algorithm>
#include <cstdint>

#include "nil2/error.hpp"

namespace nil2 {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, unsigned k) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(k + 1, Rational(0));
  p.c_[k] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& c) { return c != 0; }));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  Poly p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rational q = rem[i + b.degree()] * inv_lead;
    if (q == 0) continue;
    quo[i] = q;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::NotInvertible, "polynomial division is not exact");
  return q;
}

std::strong_ordering compare(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    int s = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result(1);
  Poly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

namespace {

using u64 = std::uint64_t;
using ModVec = std::vector<u64>;

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

void mod_trim(ModVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModVec mod_reduce(const std::vector<Integer>& a, u64 p) {
  ModVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  mod_trim(r);
  return r;
}

// Monic gcd over Z/p.
ModVec mod_gcd(ModVec a, ModVec b, u64 p) {
  while (!b.empty()) {
    const u64 inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  const u64 inv = mod_pow(a.back(), p - 2, p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

const std::vector<u64>& gcd_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 n = 2147483647; out.size() < 64; n -= 2) {
      bool prime = true;
      for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

// gcd of primitive integer polynomials of positive degree, by Chinese
// remaindering of modular images.
Poly modular_gcd(const std::vector<Integer>& A, const std::vector<Integer>& B) {
  Integer c;
  mpz_gcd(c.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  const Poly a = from_integers(A), b = from_integers(B);
  std::vector<Integer> H, prev;
  Integer M = 1;
  std::size_t d = std::min(A.size(), B.size()) + 1;
  for (u64 p : gcd_primes()) {
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    ModVec g = mod_gcd(mod_reduce(A, p), mod_reduce(B, p), p);
    if (g.size() == 1) return Poly(1);
    if (g.size() > d) continue;
    const u64 cp = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (auto& x : g) x = x * cp % p;
    if (g.size() < d) {
      d = g.size();
      H.assign(g.begin(), g.end());
      for (std::size_t i = 0; i < d; ++i) H[i] = Integer(static_cast<unsigned long>(g[i]));
      M = static_cast<unsigned long>(p);
      prev.clear();
      continue;
    }
    // CRT: H' = H + M * ((g - H) / M mod p).
    const u64 minv = mod_pow(mpz_fdiv_ui(M.get_mpz_t(), p), p - 2, p);
    for (std::size_t i = 0; i < d; ++i) {
      const u64 h = mpz_fdiv_ui(H[i].get_mpz_t(), p);
      const u64 k = (g[i] + p - h) % p * minv % p;
      H[i] += M * static_cast<unsigned long>(k);
    }
    M *= static_cast<unsigned long>(p);
    std::vector<Integer> sym = H;
    const Integer half = M / 2;
    for (auto& x : sym)
      if (x > half) x -= M;
    if (sym != prev) {
      prev = sym;
      continue;
    }
    const Poly cand = from_integers(sym).monic();
    if (divmod(a, cand).second.is_zero() && divmod(b, cand).second.is_zero()) return cand;
  }
  // Not reached for inputs of reasonable size; fall back to Euclid.
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  return modular_gcd(primitive_part(a).coeffs, primitive_part(b).coeffs);
}

Bezout poly_xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Integer common_denominator(const Poly& a) {
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

IntegerPoly primitive_part(const Poly& a) {
  IntegerPoly out{Rational(0), {}};
  if (a.is_zero()) return out;
  Integer l = common_denominator(a);
  Integer g = 0;
  out.coeffs.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.coeffs.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (out.coeffs.back() < 0) g = -g;
  for (auto& v : out.coeffs) v /= g;
  out.scale = Rational(g, l);
  out.scale.canonicalize();
  return out;
}

Poly from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

std::string format_integer_poly(const std::vector<Integer>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  Integer l = common_denominator(*this);
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) ints.push_back(c.get_num() * (l / c.get_den()));
  std::string body = format_integer_poly(ints);
  if (l == 1) return body;
  if (term_count() == 1) return body + "/" + l.get_str();
  return "(" + body + ")/" + l.get_str();
}

}  // namespace nil2
