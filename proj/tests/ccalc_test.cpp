#include <gtest/gtest.h>

#include "nil2/ccalc.hpp"
#include "nil2/error.hpp"
#include "nil2/generators.hpp"
#include "nil2/scalar_parser.hpp"
#include "nil2/tensor.hpp"

namespace nil2 {
namespace {

const SchemaPtr kRank2 = schema_preset("free2", 2);
const CReductionStrategy kPoly = CReductionStrategy::automatic(kRank2, RingKind::QtPoly);
const CReductionStrategy kField = CReductionStrategy::automatic(kRank2, RingKind::QtField);

Poly P(const char* text) { return std::get<Poly>(parse_scalar(text, RingKind::QtPoly).value()); }
RatFun F(const char* text) { return parse_scalar(text, RingKind::QtField).to_ratfun(); }

Scalar S(const CReductionStrategy& s, const char* text) { return parse_scalar(text, s.ring); }

DVector poly_vec(std::initializer_list<std::tuple<const char*, const char*, unsigned, const char*>> terms) {
  DVector v(RingKind::QtPoly);
  for (const auto& [a, b, k, c] : terms) v.add_term(CKeyPoly{P(a), P(b), k}, S(kPoly, c));
  return v;
}

TensorElement word(const CReductionStrategy& s, long a, long b) {
  HallElement h = HallElement::identity(s.schema, s.ring);
  h.a = {Scalar(s.ring, a), Scalar(s.ring, b)};
  return TensorElement::from_hall(h);
}

TensorElement xy_power(const CReductionStrategy& s, const char* e) {
  HallElement h = HallElement::identity(s.schema, s.ring);
  h.a = {S(s, e), S(s, e)};
  return TensorElement::from_hall(h);
}

TEST(Strategy, Selection) {
  EXPECT_EQ(kPoly.kind, StrategyKind::PolyRank2);
  EXPECT_EQ(kField.kind, StrategyKind::FieldRank2);
  EXPECT_EQ(CReductionStrategy::automatic(kRank2, RingKind::Q).kind, StrategyKind::FormalGeneric);
  EXPECT_EQ(CReductionStrategy::automatic(schema_preset("free2", 3), RingKind::QtPoly).kind,
            StrategyKind::FormalGeneric);
  try {
    CReductionStrategy::make(StrategyKind::PolyRank2, kRank2, RingKind::QtField);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StrategyMismatch);
  }
  EXPECT_THROW(CReductionStrategy::make(StrategyKind::FieldRank2, schema_preset("free2", 3), RingKind::QtField),
               Error);
}

TEST(Ccoord, Examples) {
  EXPECT_EQ(ccoord(kPoly, S(kPoly, "1"), S(kPoly, "1"), S(kPoly, "t")), poly_vec({{"1", "1", 0, "1"}}));
  EXPECT_TRUE(ccoord(kPoly, S(kPoly, "t^2+1"), S(kPoly, "t"), S(kPoly, "3/4")).is_zero());
  EXPECT_TRUE(ccoord(kField, S(kField, "1/t"), S(kField, "t"), S(kField, "-2")).is_zero());
  EXPECT_EQ(ccoord(kPoly, S(kPoly, "1"), S(kPoly, "1"), S(kPoly, "t^2")),
            poly_vec({{"1", "1", 1, "1"}, {"1", "1", 0, "t"}}));
  EXPECT_EQ(ccoord(kPoly, S(kPoly, "2*t"), S(kPoly, "3*t"), S(kPoly, "t")), poly_vec({{"1", "3/2", 1, "2"}}));
  EXPECT_EQ(ccoord(kPoly, S(kPoly, "1"), S(kPoly, "1"), S(kPoly, "t^2+1")),
            ccoord(kPoly, S(kPoly, "1"), S(kPoly, "1"), S(kPoly, "t^2")));
  EXPECT_TRUE(ccoord(kPoly, S(kPoly, "0"), S(kPoly, "1"), S(kPoly, "t")).is_zero());

  const DVector f = ccoord(kField, S(kField, "1/(t-1)"), S(kField, "1"), S(kField, "t"));
  EXPECT_EQ(f, DVector::single(RingKind::QtField, CKeyField{SimpleFraction{P("t-1"), 1, 0}, F("t-1")},
                               Scalar::one(RingKind::QtField)));
  EXPECT_EQ(to_string(f), "c(x^{1/(t-1)},y)_t: 1");
  EXPECT_EQ(to_string(ccoord(kPoly, S(kPoly, "1"), S(kPoly, "1"), S(kPoly, "t^2"))),
            "c(x,y)_t: t\nc(x^t,y^t)_t: 1");
}

TEST(Ccoord, FieldSubscripts) {
  // c(x,y)_{1/t} = c(x^{1/t}, y^{1/t})_t^{-1/t}
  const DVector v = ccoord(kField, S(kField, "1"), S(kField, "1"), S(kField, "1/t"));
  DVector expected(RingKind::QtField);
  expected.add_term(CKeyField{SimpleFraction{P("t"), 1, 0}, F("1")}, S(kField, "-1/t"));
  EXPECT_EQ(v, expected);
  // The paper basis rejects decompositions that need t.
  CReductionStrategy paper = kField;
  paper.s_basis = SBasisMode::Paper;
  EXPECT_NO_THROW(ccoord(paper, S(kField, "1"), S(kField, "1"), S(kField, "t")));
  try {
    ccoord(paper, S(kField, "t"), S(kField, "1"), S(kField, "t"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BasisNotSpanning);
  }
}

TEST(Ccoord, FactorBound) {
  CReductionStrategy tight = kField;
  tight.factor_degree_bound = 2;
  try {
    ccoord(tight, S(kField, "1/(t^3-2)"), S(kField, "1"), S(kField, "t"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorDegreeExceeded);
  }
  EXPECT_NO_THROW(ccoord(kField, S(kField, "1/(t^3-2)"), S(kField, "1"), S(kField, "t")));
}

TEST(Ccoord, DegenerateOverZAndQ) {
  for (RingKind r : {RingKind::Z, RingKind::Q}) {
    const auto s = CReductionStrategy::automatic(kRank2, r);
    for (int i = 0; i < 100; ++i) {
      Sampler smp(41, static_cast<std::uint64_t>(i));
      EXPECT_TRUE(ccoord(s, smp.scalar(r), smp.scalar(r), smp.scalar(r)).is_zero());
    }
  }
}

TEST(CBinary, Examples) {
  const TensorElement x = word(kPoly, 1, 0), y = word(kPoly, 0, 1);
  EXPECT_EQ(c_binary(kPoly, x, y, S(kPoly, "t")), poly_vec({{"1", "1", 0, "1"}}));
  EXPECT_TRUE(c_binary(kPoly, word(kPoly, 3, -2), TensorElement::identity(kRank2, RingKind::QtPoly), S(kPoly, "t^3"))
                  .is_zero());
  EXPECT_TRUE(c_binary(kPoly, xy_power(kPoly, "t"), xy_power(kPoly, "t^2"), S(kPoly, "t")).is_zero());
  EXPECT_THROW(c_binary(CReductionStrategy::automatic(kRank2, RingKind::Q), word(kPoly, 1, 0), word(kPoly, 0, 1),
                        Scalar::one(RingKind::Q)),
               Error);
}

TEST(CMulti, Examples) {
  const TensorElement x = word(kPoly, 1, 0), y = word(kPoly, 0, 1);
  const Scalar t = S(kPoly, "t");
  EXPECT_TRUE(c_multi(kPoly, std::vector<TensorElement>{x}, t).is_zero());
  EXPECT_EQ(c_multi(kPoly, std::vector<TensorElement>{x, y}, t), c_binary(kPoly, x, y, t));
  const DVector left = c_multi(kPoly, std::vector<TensorElement>{x, y, x}, t);
  const DVector right = c_binary(kPoly, x, t_mul(y, x), t) + c_binary(kPoly, y, x, t);
  EXPECT_EQ(left, right);
  // D-part of (xyx)^t.
  EXPECT_EQ(t_exp(kPoly, t_mul(t_mul(x, y), x), t).d, ccoord(kPoly, S(kPoly, "2"), S(kPoly, "1"), t));
}

TEST(CcoordFormal, Examples) {
  const auto s = CReductionStrategy::automatic(schema_preset("free2", 3), RingKind::QtPoly);
  const Scalar one = Scalar::one(s.ring), zero = Scalar::zero(s.ring), t = Scalar::t(s.ring);
  const std::vector<Scalar> g{one, zero, zero}, h{zero, one, zero};
  EXPECT_TRUE(ccoord_formal(s, g, h, one).is_zero());
  EXPECT_EQ(ccoord_formal(s, g, h, S(s, "t+1")), ccoord_formal(s, g, h, t));
  EXPECT_EQ(ccoord_formal(s, g, h, t), DVector::single(s.ring, FormalCKey{g, h, t}, one));
  const DVector sq = ccoord_formal(s, g, h, S(s, "t^2"));
  EXPECT_EQ(sq.size(), 2u);
  DVector expected(s.ring);
  expected.add_term(FormalCKey{{t, zero, zero}, {zero, t, zero}, t}, one);
  expected.add_term(FormalCKey{g, h, t}, t);
  EXPECT_EQ(sq, expected);
}

class CcoordProperties : public ::testing::TestWithParam<RingKind> {
 protected:
  CReductionStrategy strategy() const { return CReductionStrategy::automatic(kRank2, GetParam(), 16); }
};

TEST_P(CcoordProperties, LinearityAndSubscriptRelations) {
  const auto s = strategy();
  const RingKind r = s.ring;
  for (int i = 0; i < 200; ++i) {
    Sampler smp(42, static_cast<std::uint64_t>(i));
    const Scalar a = smp.scalar(r), b = smp.scalar(r), l = smp.scalar(r), m = smp.scalar(r);
    const Rational q = smp.rational();
    const Scalar t = Scalar::t(r);
    EXPECT_EQ(ccoord(s, a.scaled(q), b.scaled(q), t), Scalar::from_rational(r, q) * ccoord(s, a, b, t));
    // E8
    EXPECT_EQ(ccoord(s, a, b, l + m), ccoord(s, a, b, l) + ccoord(s, a, b, m));
    // E9
    EXPECT_EQ(ccoord(s, a, b, l * m), ccoord(s, l * a, l * b, m) + m * ccoord(s, a, b, l));
    // Confluence of the two monomial splits.
    EXPECT_EQ(ccoord(s, a, b, l, SubscriptSplit::TFirst), ccoord(s, a, b, l, SubscriptSplit::TLast));
    // E10' on a proportional pair.
    const Scalar p1 = smp.scalar(r), p2 = smp.scalar(r);
    EXPECT_EQ(ccoord(s, (p1 + p2) * a, (p1 + p2) * b, l), ccoord(s, p1 * a, p1 * b, l) + ccoord(s, p2 * a, p2 * b, l));
  }
}

TEST_P(CcoordProperties, CCommutatorIdentities) {
  const auto s = strategy();
  const RingKind r = s.ring;
  for (int i = 0; i < 200; ++i) {
    Sampler smp(43, static_cast<std::uint64_t>(i));
    const TensorElement g = random_tensor(smp, s), h = random_tensor(smp, s), f = random_tensor(smp, s);
    const Scalar al = smp.scalar(r), be = smp.scalar(r);
    // F13
    EXPECT_EQ(c_binary(s, g, h, al), c_binary(s, h, g, al));
    // F14
    EXPECT_EQ(c_binary(s, t_mul(g, h), f, al) + c_binary(s, g, h, al),
              c_binary(s, g, t_mul(h, f), al) + c_binary(s, h, f, al));
    // F15
    EXPECT_EQ(c_binary(s, t_mul(t_inv(h), g), h, al), -c_binary(s, t_inv(h), g, al));
    // F7
    EXPECT_EQ(be * c_binary(s, g, h, al) + c_binary(s, t_exp(s, g, al), t_exp(s, h, al), be),
              al * c_binary(s, g, h, be) + c_binary(s, t_exp(s, g, be), t_exp(s, h, be), al));
    // F12
    const Scalar u = smp.nonzero_scalar(r);
    if (u.is_invertible()) {
      const Scalar ui = u.inverse();
      EXPECT_EQ(c_binary(s, g, h, ui), (-ui) * c_binary(s, t_exp(s, g, ui), t_exp(s, h, ui), u));
    }
    // Central factors are invisible.
    const TensorElement z = random_central(smp, s);
    EXPECT_EQ(c_binary(s, g, t_mul(h, z), al), c_binary(s, g, h, al));
  }
}

TEST_P(CcoordProperties, GroupRoute) {
  // c(g,h)_a = [g,h]^{C(a,2)} h^-a g^-a (gh)^a computed with group operations.
  const auto s = strategy();
  const RingKind r = s.ring;
  for (int i = 0; i < 200; ++i) {
    Sampler smp(44, static_cast<std::uint64_t>(i));
    const TensorElement g = random_tensor(smp, s), h = random_tensor(smp, s);
    const Scalar al = smp.scalar(r);
    TensorElement c = t_exp(s, t_commutator(g, h), binomial(al, 2));
    c = t_mul(c, t_inv(t_exp(s, h, al)));
    c = t_mul(c, t_inv(t_exp(s, g, al)));
    c = t_mul(c, t_exp(s, t_mul(g, h), al));
    EXPECT_TRUE(c.hall.is_identity());
    EXPECT_EQ(c.d, c_binary(s, g, h, al));
  }
}

TEST_P(CcoordProperties, OutputKeysAreCanonical) {
  const auto s = strategy();
  const RingKind r = s.ring;
  for (int i = 0; i < 200; ++i) {
    Sampler smp(45, static_cast<std::uint64_t>(i));
    const DVector v = ccoord(s, smp.scalar(r), smp.scalar(r), smp.scalar(r));
    for (const auto& [key, c] : v.terms()) {
      EXPECT_FALSE(c.is_zero());
      if (const auto* k = std::get_if<CKeyPoly>(&key)) {
        EXPECT_TRUE(k->alpha0.is_monic());
        EXPECT_FALSE(k->beta0.is_zero());
        EXPECT_TRUE(poly_gcd(k->alpha0, k->beta0).is_one());
      } else {
        const auto& f = std::get<CKeyField>(key);
        EXPECT_FALSE(f.beta_hat.is_zero());
        if (const auto* sf = std::get_if<SimpleFraction>(&f.s)) {
          EXPECT_TRUE(sf->p.is_monic());
          EXPECT_LT(static_cast<int>(sf->j), sf->p.degree());
          EXPECT_EQ(poly_factor_bounded(sf->p, 16).factors.size(), 1u);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, CcoordProperties, ::testing::Values(RingKind::QtPoly, RingKind::QtField));

}  // namespace
}  // namespace nil2
