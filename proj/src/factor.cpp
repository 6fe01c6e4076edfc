#include "nil2/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>

#include "nil2/error.hpp"

// Factorization over Q: Yun squarefree decomposition, then for each
// squarefree part a small-prime modular factorization (distinct-degree plus
// Cantor-Zassenhaus), linear Hensel lifting past the Mignotte bound, and
// exhaustive recombination of the lifted factors.

namespace nil2 {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& x) const {
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
  }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mp_sub(const Zp& z, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = z.sub(r[i], b[i]);
  trim(r);
  return r;
}

ModPoly mp_mul(const Zp& z, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = z.add(r[i + j], z.mul(a[i], b[j]));
  trim(r);
  return r;
}

ModPoly mp_scale(const Zp& z, ModPoly a, u64 c) {
  for (auto& x : a) x = z.mul(x, c);
  trim(a);
  return a;
}

std::pair<ModPoly, ModPoly> mp_divmod(const Zp& z, const ModPoly& a, const ModPoly& b) {
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly rem = a;
  ModPoly quo(a.size() - b.size() + 1, 0);
  const u64 inv_lead = z.inv(b.back());
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    u64 q = z.mul(rem[i + deg(b)], inv_lead);
    quo[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] = z.sub(rem[i + j], z.mul(q, b[j]));
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

ModPoly mp_monic(const Zp& z, const ModPoly& a) {
  if (a.empty()) return a;
  return mp_scale(z, a, z.inv(a.back()));
}

ModPoly mp_gcd(const Zp& z, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mp_divmod(z, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(z, a);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_xgcd(const Zp& z, const ModPoly& a, const ModPoly& b) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(z, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(z, s0, mp_mul(z, q, s1));
    ModPoly t2 = mp_sub(z, t0, mp_mul(z, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = z.inv(r0.back());
  return {mp_scale(z, s0, inv), mp_scale(z, t0, inv)};
}

ModPoly mp_powmod(const Zp& z, ModPoly base, const Integer& e, const ModPoly& mod) {
  ModPoly result{1};
  base = mp_divmod(z, base, mod).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_divmod(z, mp_mul(z, result, result), mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_divmod(z, mp_mul(z, result, base), mod).second;
  }
  return result;
}

ModPoly mp_derivative(const Zp& z, const ModPoly& a) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = z.mul(a[i], i % z.p);
  trim(r);
  return r;
}

ModPoly to_mod(const Zp& z, const ZPoly& a) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = z.reduce(a[i]);
  trim(r);
  return r;
}

// Splits a product of distinct monic irreducibles of degree d.
void equal_degree_split(const Zp& z, const ModPoly& g, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(z.p), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, z.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mp_sub(z, mp_powmod(z, a, e, g), ModPoly{1});
    ModPoly u = mp_gcd(z, g, b);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree_split(z, u, d, rng, out);
      equal_degree_split(z, mp_divmod(z, g, u).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(const Zp& z, const ModPoly& f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eedULL + z.p);
  ModPoly rest = f;
  ModPoly x{0, 1};
  ModPoly w = x;
  for (int i = 1; deg(rest) >= 2 * i; ++i) {
    w = mp_powmod(z, w, Integer(static_cast<unsigned long>(z.p)), rest);
    ModPoly g = mp_gcd(z, rest, mp_sub(z, w, x));
    if (deg(g) > 0) {
      equal_degree_split(z, g, i, rng, out);
      rest = mp_divmod(z, rest, g).first;
      w = mp_divmod(z, w, rest).second;
    }
  }
  if (deg(rest) > 0) out.push_back(mp_monic(z, rest));
  return out;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

void reduce_nonneg(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void reduce_symmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

struct Lifted {
  ZPoly g;  // monic
  ZPoly h;  // leading coefficient = lc(f) mod modulus
};

// f = lc * g * h (mod p) with g, h monic and coprime; lifts to mod p^e.
Lifted hensel_lift(const Zp& z, const ZPoly& f, const ModPoly& g, const ModPoly& h, unsigned e) {
  const u64 lc = z.reduce(f.back());
  const u64 lc_inv = z.inv(lc);
  auto [s, t] = mp_xgcd(z, g, h);
  (void)s;
  const ModPoly lc_h = mp_scale(z, h, lc);
  ZPoly G = from_mod(g);
  ZPoly H = from_mod(lc_h);
  Integer q = static_cast<unsigned long>(z.p);
  const Integer p = q;
  for (unsigned k = 1; k < e; ++k) {
    ZPoly err = f;
    ZPoly gh = z_mul(G, H);
    if (gh.size() > err.size()) err.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) err[i] -= gh[i];
    for (auto& c : err) c /= q;
    ModPoly eb = to_mod(z, err);
    ModPoly dg = mp_divmod(z, mp_scale(z, mp_mul(z, t, eb), lc_inv), g).second;
    ModPoly dh = mp_divmod(z, mp_sub(z, eb, mp_mul(z, dg, lc_h)), g).first;
    if (G.size() < dg.size()) G.resize(dg.size(), Integer(0));
    for (std::size_t i = 0; i < dg.size(); ++i) G[i] += q * static_cast<unsigned long>(dg[i]);
    if (H.size() < dh.size()) H.resize(dh.size(), Integer(0));
    for (std::size_t i = 0; i < dh.size(); ++i) H[i] += q * static_cast<unsigned long>(dh[i]);
    q *= p;
    reduce_nonneg(G, q);
    reduce_nonneg(H, q);
  }
  return {G, H};
}

Poly to_poly(const ZPoly& a) { return from_integers(a); }

ZPoly primitive(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  ZPoly r = a;
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.empty()) return r;
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

// Integer quotient f / g when g divides f over Z.
std::optional<ZPoly> z_divides(const ZPoly& f, const ZPoly& g) {
  if (f.front() != 0 && g.front() != 0 && !mpz_divisible_p(f.front().get_mpz_t(), g.front().get_mpz_t()))
    return std::nullopt;
  auto [q, r] = divmod(to_poly(f), to_poly(g));
  if (!r.is_zero()) return std::nullopt;
  auto pp = primitive_part(q);
  if (pp.scale.get_den() != 1) return std::nullopt;
  ZPoly out = pp.coeffs;
  for (auto& c : out) c *= pp.scale.get_num();
  return out;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors (primitive, positive leading coefficient) of a
// primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::optional<Zp> best;
  std::vector<ModPoly> best_factors;
  int good_primes = 0;
  for (unsigned p = 3; good_primes < 4 && p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    Zp z{p};
    if (z.reduce(f.back()) == 0) continue;
    ModPoly fm = mp_monic(z, to_mod(z, f));
    if (deg(mp_gcd(z, fm, mp_derivative(z, fm))) != 0) continue;
    ++good_primes;
    auto factors = factor_mod_p(z, fm);
    if (!best || factors.size() < best_factors.size()) {
      best = z;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1) return {f};
  }
  const Zp z = *best;

  // Mignotte-style bound on coefficients of lc(f) * (any factor).
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
  root += 1;
  Integer bound = 2 * abs(f.back()) * root * maxc;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  unsigned e = 1;
  Integer modulus = static_cast<unsigned long>(z.p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(z.p);
    ++e;
  }

  std::vector<ZPoly> lifted;
  ZPoly current = f;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) rest = mp_mul(z, rest, best_factors[j]);
    Lifted l = hensel_lift(z, current, best_factors[i], rest, e);
    lifted.push_back(std::move(l.g));
    current = std::move(l.h);
  }
  {
    Integer inv;
    Integer lc = current.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : current) c *= inv;
    reduce_nonneg(current, modulus);
    lifted.push_back(std::move(current));
  }

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly rest_f = f;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{rest_f.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) {
          cand = z_mul(cand, lifted[remaining[i]]);
          reduce_symmetric(cand, modulus);
        }
      cand = primitive(cand);
      if (cand.size() < 2) continue;
      if (auto q = z_divides(rest_f, cand)) {
        result.push_back(cand);
        rest_f = primitive(*q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (!pick[i]) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (rest_f.size() > 1) result.push_back(rest_f);
  return result;
}

std::vector<Poly> factor_squarefree(const Poly& s) {
  if (s.degree() <= 1) return {s.monic()};
  ZPoly f = primitive_part(s).coeffs;
  std::vector<Poly> out;
  if (f.front() == 0) {
    // Strip the factor t so the modular step sees a nonzero constant term.
    out.push_back(Poly::t());
    f.erase(f.begin());
    if (f.size() <= 2) {
      if (f.size() == 2) out.push_back(to_poly(f).monic());
      return out;
    }
  }
  for (const auto& g : zassenhaus(f)) out.push_back(to_poly(g).monic());
  return out;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree decomposition of zero");
  Poly f = a.monic();
  if (f.degree() <= 0) return out;
  Poly fp = f.derivative();
  Poly a0 = poly_gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = c - b.derivative();
  for (unsigned i = 1;; ++i) {
    Poly ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = exact_div(b, ai);
    if (b.degree() <= 0) break;
    c = exact_div(d, ai);
    d = c - b.derivative();
  }
  return out;
}

namespace {

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

using FactorList = std::vector<std::pair<Poly, unsigned>>;

// Factorizations of monic polynomials, shared across calls.
FactorList cached_factors(const Poly& monic) {
  static std::mutex mu;
  static std::map<Poly, FactorList, PolyLess> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(monic); it != cache.end()) return it->second;
  }
  FactorList out;
  for (const auto& [part, mult] : squarefree_decomposition(monic))
    for (auto& p : factor_squarefree(part)) out.emplace_back(std::move(p), mult);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare(x.first, y.first) < 0; });
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 100000) cache.clear();
  cache.emplace(monic, out);
  return out;
}

}  // namespace

Factorization poly_factor_bounded(const Poly& a, int max_deg) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  Factorization out{a.lead(), cached_factors(a.monic())};
  for (const auto& [p, mult] : out.factors)
    if (p.degree() > max_deg)
      throw Error(ErrorKind::FactorDegreeExceeded, "irreducible factor " + p.to_string() + " has degree " +
                                                       std::to_string(p.degree()) + " > bound " +
                                                       std::to_string(max_deg));
  return out;
}

}  // namespace nil2
