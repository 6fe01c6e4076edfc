// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nil2/ccalc.hpp"
#include "nil2/checks.hpp"
#include "nil2/factor.hpp"
#include "nil2/hall.hpp"
#include "nil2/oracle.hpp"
#include "nil2/random.hpp"
#include "nil2/rword.hpp"
#include "nil2/sbasis.hpp"

using namespace nil2;

namespace {

const SchemaPtr kRank2 = schema_preset("free2nilpotent", 2);
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool ok = true;
  std::string note;
};

// Runs the named properties and folds the reports into a verdict.
Verdict run(RingKind ring, const std::vector<std::pair<std::string, long>>& props) {
  Verdict v;
  std::ostringstream note;
  RunConfig config{CReductionStrategy::automatic(kRank2, ring), kSeed, 0, 0};
  for (const auto& [name, cases] : props) {
    const Property* prop = nullptr;
    for (const auto& p : all_properties())
      if (p.suite + "/" + p.name == name) prop = &p;
    if (!prop) {
      v.ok = false;
      note << " missing " << name;
      continue;
    }
    config.cases = cases;
    const PropertyReport r = run_property(*prop, config);
    note << " " << ring_name(ring) << ":" << prop->name << "=" << r.passed;
    if (r.failed || r.passed < cases) {
      v.ok = false;
      note << " (failed " << r.failed << ", skipped " << r.skipped << ")";
      if (!r.counterexample.empty()) note << " [" << r.counterexample << "]";
    }
  }
  v.note = note.str();
  return v;
}

Verdict both(Verdict a, const Verdict& b) {
  a.ok = a.ok && b.ok;
  a.note += b.note;
  return a;
}

HallElement H(long a1, long a2, long c) {
  HallElement g = HallElement::identity(kRank2, RingKind::Z);
  g.a = {Scalar(RingKind::Z, a1), Scalar(RingKind::Z, a2)};
  g.b = {Scalar(RingKind::Z, c)};
  return g;
}

Verdict hall_oracle_exhaustive() {
  std::vector<HallElement> grid;
  for (long a1 = -2; a1 <= 2; ++a1)
    for (long a2 = -2; a2 <= 2; ++a2)
      for (long c = -2; c <= 2; ++c) grid.push_back(H(a1, a2, c));
  long exp_checks = 0, mul_checks = 0, failures = 0;
  for (const auto& g : grid)
    for (long k = -6; k <= 6; ++k, ++exp_checks)
      if (!(hall_exp(g, Scalar(RingKind::Z, k)) == oracle::int_exp_oracle(g, k, 6))) ++failures;
  for (const auto& g : grid)
    for (const auto& h : grid) {
      ++mul_checks;
      if (!(oracle::matrix_model(hall_mul(g, h)) == oracle::matrix_model(g) * oracle::matrix_model(h))) ++failures;
    }
  return {failures == 0, " exp checks " + std::to_string(exp_checks) + ", mul checks " + std::to_string(mul_checks) +
                             ", failures " + std::to_string(failures)};
}

Verdict sign_resolution() {
  const HallElement xy = hall_mul(H(1, 0, 0), H(0, 1, 0));
  const HallElement expected = H(2, 2, 1);
  const HallElement by_product = hall_mul(xy, xy);
  const HallElement by_matrix =
      oracle::from_matrix(oracle::mat_pow(oracle::matrix_model(xy), 2), kRank2, RingKind::Z);
  const HallElement by_exp = hall_exp(xy, Scalar(RingKind::Z, 2));
  const bool ok = by_product == expected && by_matrix == expected && by_exp == expected;
  // The alternative sign would give (2,2;-1).
  const bool minus_sign_absent = !(by_exp == H(2, 2, -1));
  return {ok && minus_sign_absent, " (xy)^2 = " + to_string(by_exp) + " by product, matrix and hall_exp;" +
                                       " the -alpha*beta variant (2,2;-1) is not reproduced"};
}

bool key_well_formed(const CKey& key, std::string& why) {
  if (const auto* k = std::get_if<CKeyPoly>(&key)) {
    if (!k->alpha0.is_monic()) why = "alpha0 not monic";
    else if (!poly_gcd(k->alpha0, k->beta0).is_one()) why = "alpha0, beta0 not coprime";
    return why.empty();
  }
  if (const auto* k = std::get_if<CKeyField>(&key)) {
    if (const auto* f = std::get_if<SimpleFraction>(&k->s)) {
      const Factorization fac = poly_factor_bounded(f->p);
      const bool irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1 && fac.unit == 1;
      if (!irreducible || f->m < 1 || static_cast<int>(f->j) >= f->p.degree()) why = "s not in S_std";
    }
    return why.empty();
  }
  why = "formal key";
  return false;
}

Verdict basis_keys(RingKind ring, long cases) {
  const CReductionStrategy st = CReductionStrategy::automatic(kRank2, ring);
  long failures = 0, keys = 0;
  std::string first;
  for (long i = 0; i < cases; ++i) {
    Sampler s(kSeed, 0xba515ULL << 32 ^ static_cast<std::uint64_t>(i));
    const Scalar a = s.scalar(ring), b = s.scalar(ring), l = s.scalar(ring);
    const DVector d = ccoord(st, a, b, l);
    for (const auto& [key, coeff] : d.terms()) {
      ++keys;
      std::string why;
      if (!key_well_formed(key, why) || coeff.is_zero()) {
        if (coeff.is_zero()) why = "zero coefficient";
        if (!failures++) first = key_to_string(key) + ": " + why;
      }
    }
  }
  std::string note = " " + std::string(ring_name(ring)) + ": " + std::to_string(cases) + " triples, " +
                     std::to_string(keys) + " keys";
  if (failures) note += ", failures " + std::to_string(failures) + " [" + first + "]";
  return {failures == 0, note};
}

Verdict partial_fraction_round_trip(long cases) {
  long failures = 0;
  std::string first;
  for (long i = 0; i < cases; ++i) {
    Sampler s(kSeed, 0x9f9fULL << 32 ^ static_cast<std::uint64_t>(i));
    const RatFun f = s.ratfun();
    const PartialFractions pf = partial_fractions(f);
    bool ok = recombine(pf) == f;
    for (const auto& [elem, coeff] : pf.terms) {
      const auto* sf = std::get_if<SimpleFraction>(&elem);
      ok = ok && sf && sf->p.is_monic() && sf->p.degree() <= 2 && static_cast<int>(sf->j) < sf->p.degree() &&
           coeff != 0;
    }
    // Through the additive basis as well.
    ok = ok && recombine(additive_decompose(Scalar::from_ratfun(RingKind::QtField, f))) == f;
    if (!ok && !failures++) first = f.to_string();
  }
  std::string note = " " + std::to_string(cases) + " rational functions";
  if (failures) note += ", failures " + std::to_string(failures) + " [" + first + "]";
  return {failures == 0, note};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Verdict()> body;
  };
  const std::vector<Criterion> criteria = {
      {"1 hall/oracle equivalence", 10, hall_oracle_exhaustive},
      {"2 sign resolution", 1, sign_resolution},
      {"3 R-group axioms", 60,
       [] {
         const std::vector<std::pair<std::string, long>> props = {{"axioms/axiom-1", 1000},
                                                                  {"axioms/axiom-2.1", 1000},
                                                                  {"axioms/axiom-2.2", 1000},
                                                                  {"axioms/axiom-3", 1000},
                                                                  {"axioms/axiom-4", 500}};
         return both(run(RingKind::QtPoly, props), run(RingKind::QtField, props));
       }},
      {"4 basis correctness", 30,
       [] { return both(basis_keys(RingKind::QtPoly, 1000), basis_keys(RingKind::QtField, 1000)); }},
      {"5 confluence", 30,
       [] {
         const std::vector<std::pair<std::string, long>> props = {{"confluence/subscript-split", 1000},
                                                                  {"facts/F14", 1000},
                                                                  {"confluence/c-multi-bracketing", 1000},
                                                                  {"confluence/bracketing", 1000}};
         return run(RingKind::QtPoly, props);
       }},
      {"6 c-commutator identities", 60,
       [] {
         const std::vector<std::pair<std::string, long>> props = {
             {"facts/F7", 500}, {"facts/F12", 500}, {"facts/F13", 500}, {"facts/F15", 500}, {"facts/E10'", 500}};
         return both(run(RingKind::QtPoly, props), run(RingKind::QtField, props));
       }},
      {"7 rational degeneracy", 10,
       [] {
         const std::vector<std::pair<std::string, long>> props = {{"axioms/rational-degeneracy", 500}};
         return both(run(RingKind::Q, props), run(RingKind::Z, props));
       }},
      {"8 print/parse round trip", 30,
       [] { return run(RingKind::QtPoly, {{"confluence/print-parse-round-trip", 500}}); }},
      {"9 partial-fraction round trip", 10, [] { return partial_fraction_round_trip(1000); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string(" raised: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %s (%.2fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.name, secs,
                c.limit_seconds, in_time ? "" : " over time;", v.note.c_str());
    std::fflush(stdout);
  }
  return failed;
}
