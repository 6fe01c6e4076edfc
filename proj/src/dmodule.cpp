#include "nil2/dmodule.hpp"

#include <cctype>

#include "nil2/error.hpp"

namespace nil2 {

namespace {

template <class T>
std::strong_ordering lex(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

std::strong_ordering order(const CKeyPoly& a, const CKeyPoly& b) {
  if (auto c = a.k <=> b.k; c != 0) return c;
  if (auto c = compare(a.alpha0, b.alpha0); c != 0) return c;
  return compare(a.beta0, b.beta0);
}

std::strong_ordering order(const CKeyField& a, const CKeyField& b) {
  if (auto c = compare(a.s, b.s); c != 0) return c;
  return compare(a.beta_hat, b.beta_hat);
}

std::strong_ordering order(const FormalCKey& a, const FormalCKey& b) {
  if (auto c = compare(a.subscript, b.subscript); c != 0) return c;
  if (auto c = lex(a.g, b.g); c != 0) return c;
  return lex(a.h, b.h);
}

bool is_word(const std::string& s) {
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) return false;
  return !s.empty();
}

std::string power(const std::string& base, const std::string& exponent) {
  if (exponent == "1") return base;
  if (is_word(exponent)) return base + "^" + exponent;
  return base + "^{" + exponent + "}";
}

std::string formal_word(const std::vector<Scalar>& coords, const GeneratorNames& names) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (!out.empty()) out += " ";
    const std::string name = i < names.size() ? names[i] : "u" + std::to_string(i + 1);
    out += power(name, coords[i].to_string());
  }
  return out.empty() ? "1" : out;
}

std::string subscript(const std::string& s) { return is_word(s) ? "_" + s : "_{" + s + "}"; }

}  // namespace

std::strong_ordering key_order(const CKey& a, const CKey& b) {
  if (a.index() != b.index()) throw Error(ErrorKind::MixedVariants, "keys of different kinds");
  return std::visit(
      [&](const auto& ka) -> std::strong_ordering {
        return order(ka, std::get<std::decay_t<decltype(ka)>>(b));
      },
      a);
}

std::string key_to_string(const CKey& key, const GeneratorNames& names) {
  if (const auto* k = std::get_if<CKeyPoly>(&key)) {
    const Poly tk = Poly::monomial(1, k->k);
    return "c(" + power("x", (tk * k->alpha0).to_string()) + "," + power("y", (tk * k->beta0).to_string()) + ")_t";
  }
  if (const auto* k = std::get_if<CKeyField>(&key)) {
    const RatFun s = value(k->s);
    return "c(" + power("x", s.to_string()) + "," + power("y", (k->beta_hat * s).to_string()) + ")_t";
  }
  const auto& k = std::get<FormalCKey>(key);
  return "c(" + formal_word(k.g, names) + "," + formal_word(k.h, names) + ")" + subscript(k.subscript.to_string());
}

DVector DVector::single(RingKind ring, CKey key, Scalar coeff) {
  DVector v(ring);
  v.add_term(key, coeff);
  return v;
}

void DVector::check_ring(RingKind other) const {
  if (other != ring_) throw Error(ErrorKind::MixedRings, "D-vectors over different rings");
}

void DVector::add_term(const CKey& key, const Scalar& coeff) {
  check_ring(coeff.kind());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

DVector& DVector::operator+=(const DVector& o) {
  check_ring(o.ring_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DVector& DVector::operator-=(const DVector& o) {
  check_ring(o.ring_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DVector DVector::operator-() const {
  DVector r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

DVector operator*(const Scalar& c, const DVector& v) {
  v.check_ring(c.kind());
  DVector r(v.ring_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : v.terms_) r.add_term(k, c * x);
  return r;
}

bool operator==(const DVector& a, const DVector& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (key_order(i->first, j->first) != 0 || !(i->second == j->second)) return false;
  return true;
}

std::string to_string(const DVector& v, const GeneratorNames& names) {
  if (v.is_zero()) return "(zero)";
  std::string out;
  for (const auto& [k, c] : v.terms()) {
    if (!out.empty()) out += "\n";
    out += key_to_string(k, names) + ": " + c.to_string();
  }
  return out;
}

PolyPair canonical_pair_poly(const Poly& alpha, const Poly& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw Error(ErrorKind::ZeroInput, "canonical pair of a zero exponent");
  const Poly g = poly_gcd(alpha, beta);
  const Poly a = exact_div(alpha, g);
  const Rational lead = a.lead();
  const Rational inv = 1 / lead;
  return {a * inv, exact_div(beta, g) * inv, g * lead};
}

FieldPair canonical_pair_field(const RatFun& alpha, const RatFun& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw Error(ErrorKind::ZeroInput, "canonical pair of a zero exponent");
  return {beta / alpha, alpha};
}

}  // namespace nil2
