#include "nil2/sbasis.hpp"

#include <map>
#include <mutex>

namespace nil2 {

std::strong_ordering compare(const SBasisElem& a, const SBasisElem& b) {
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (const auto* ma = std::get_if<Monomial>(&a)) return ma->k <=> std::get<Monomial>(b).k;
  const auto& fa = std::get<SimpleFraction>(a);
  const auto& fb = std::get<SimpleFraction>(b);
  if (auto c = compare(fa.p, fb.p); c != 0) return c;
  if (auto c = fa.m <=> fb.m; c != 0) return c;
  return fa.j <=> fb.j;
}

RatFun value(const SBasisElem& s) {
  if (const auto* m = std::get_if<Monomial>(&s)) return RatFun(Poly::monomial(1, m->k));
  const auto& f = std::get<SimpleFraction>(s);
  return RatFun(Poly::monomial(1, f.j), pow(f.p, f.m));
}

std::string to_string(const SBasisElem& s) { return value(s).to_string(); }

namespace {

// One prime-power block p^e of a denominator d, with s = (d / p^e)^-1 mod p^e.
struct Block {
  Poly p;
  unsigned e;
  Poly power;
  Poly s;
};

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

std::vector<Block> blocks(const Poly& den, int max_deg) {
  static std::mutex mu;
  static std::map<Poly, std::vector<Block>, PolyLess> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(den); it != cache.end()) {
      for (const auto& b : it->second)
        if (b.p.degree() > max_deg) poly_factor_bounded(den, max_deg);
      return it->second;
    }
  }
  std::vector<Block> out;
  for (const auto& [p, e] : poly_factor_bounded(den, max_deg).factors) {
    Poly power = pow(p, e);
    Bezout bz = poly_xgcd(exact_div(den, power), power);
    out.push_back({p, e, std::move(power), std::move(bz.s)});
  }
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 100000) cache.clear();
  cache.emplace(den, out);
  return out;
}

}  // namespace

PartialFractions partial_fractions(const RatFun& f, int max_deg) {
  PartialFractions out;
  auto [quo, rem] = divmod(f.num(), f.den());
  out.polynomial_part = std::move(quo);
  if (rem.is_zero()) return out;

  for (const auto& b : blocks(f.den(), max_deg)) {
    // rem / den = sum over blocks of (rem * cofactor^-1 mod p^e) / p^e
    Poly numer = divmod(rem * b.s, b.power).second;
    // p-adic digits: numer = sum_l c_l p^l, deg c_l < deg p.
    for (unsigned l = 0; l < b.e && !numer.is_zero(); ++l) {
      auto [next, digit] = divmod(numer, b.p);
      const unsigned m = b.e - l;
      for (std::size_t j = 0; j < digit.coeffs().size(); ++j) {
        const Rational& q = digit.coeffs()[j];
        if (q != 0) out.terms.emplace(SimpleFraction{b.p, m, static_cast<unsigned>(j)}, q);
      }
      numer = std::move(next);
    }
  }
  return out;
}

RatFun recombine(const SBasisMap& terms) {
  RatFun acc;
  for (const auto& [s, q] : terms) acc = acc + RatFun(Poly(q)) * value(s);
  return acc;
}

RatFun recombine(const PartialFractions& pf) { return RatFun(pf.polynomial_part) + recombine(pf.terms); }

SBasisMap additive_decompose(const Scalar& a, int max_deg) {
  SBasisMap out;
  auto add_poly = [&](const Poly& p) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (p.coeffs()[i] != 0) out.emplace(Monomial{static_cast<unsigned>(i)}, p.coeffs()[i]);
  };
  if (a.kind() == RingKind::QtField) {
    PartialFractions pf = partial_fractions(std::get<RatFun>(a.value()), max_deg);
    add_poly(pf.polynomial_part);
    out.merge(pf.terms);
    return out;
  }
  add_poly(a.to_ratfun().num());
  return out;
}

}  // namespace nil2
