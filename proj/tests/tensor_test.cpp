#include <gtest/gtest.h>

#include "nil2/error.hpp"
#include "nil2/generators.hpp"
#include "nil2/scalar_parser.hpp"
#include "nil2/tensor.hpp"

namespace nil2 {
namespace {

const SchemaPtr kRank2 = schema_preset("free2", 2);
const CReductionStrategy kPoly = CReductionStrategy::automatic(kRank2, RingKind::QtPoly);

Scalar S(const char* text) { return parse_scalar(text, RingKind::QtPoly); }
Poly P(const char* text) { return std::get<Poly>(S(text).value()); }

TensorElement hall(std::vector<Scalar> a, std::vector<Scalar> b, RingKind ring = RingKind::QtPoly) {
  HallElement h = HallElement::identity(kRank2, ring);
  h.a = std::move(a);
  h.b = std::move(b);
  return TensorElement::from_hall(h);
}

DVector keys(std::initializer_list<std::tuple<const char*, const char*, unsigned, const char*>> terms) {
  DVector v(RingKind::QtPoly);
  for (const auto& [a, b, k, c] : terms) v.add_term(CKeyPoly{P(a), P(b), k}, S(c));
  return v;
}

TEST(Tensor, MultiplicationAndCentrality) {
  const TensorElement g = hall({S("t"), S("2")}, {S("1")}), h = hall({S("-1"), S("t^2")}, {S("0")});
  EXPECT_EQ(t_mul(g, h), TensorElement::from_hall(hall_mul(g.hall, h.hall)));
  const TensorElement d1{HallElement::identity(kRank2, RingKind::QtPoly), keys({{"1", "1", 0, "t"}})};
  const TensorElement d2{HallElement::identity(kRank2, RingKind::QtPoly), keys({{"1", "1", 0, "1"}, {"1", "2", 1, "3"}})};
  EXPECT_EQ(t_mul(d1, d2).d, keys({{"1", "1", 0, "t+1"}, {"1", "2", 1, "3"}}));
  EXPECT_TRUE(t_commutator(d1, g).is_identity());
  EXPECT_TRUE(t_commutator(g, d2).is_identity());
  EXPECT_EQ(t_inv(d1).d, -d1.d);
  EXPECT_TRUE(t_inv(TensorElement::identity(kRank2, RingKind::QtPoly)).is_identity());
  EXPECT_THROW(t_mul(g, TensorElement::identity(schema_preset("free2", 3), RingKind::QtPoly)), Error);
}

TEST(Tensor, ExponentiationExamples) {
  const TensorElement xy = hall({S("1"), S("1")}, {S("0")});
  const TensorElement a = t_exp(kPoly, xy, S("t"));
  EXPECT_EQ(a.hall, hall({S("t"), S("t")}, {S("(t^2-t)/2")}).hall);
  EXPECT_EQ(a.d, keys({{"1", "1", 0, "1"}}));

  const TensorElement b = t_exp(kPoly, xy, S("t^2+1"));
  EXPECT_EQ(b.hall, hall({S("t^2+1"), S("t^2+1")}, {S("(t^4+t^2)/2")}).hall);
  EXPECT_EQ(b.d, keys({{"1", "1", 1, "1"}, {"1", "1", 0, "t"}}));

  const TensorElement g = hall({S("t^2-3"), S("t/2")}, {S("5")});
  EXPECT_TRUE(t_exp(kPoly, g, S("0")).is_identity());
  EXPECT_EQ(t_exp(kPoly, g, S("1")), g);

  // ((x^t)(y^t))^t has D-part c(x^t,y^t)_t.
  const TensorElement xtyt = hall({S("t"), S("t")}, {S("0")});
  EXPECT_EQ(t_exp(kPoly, xtyt, S("t")).d, keys({{"1", "1", 1, "1"}}));
  EXPECT_EQ(exp_defect(kPoly, xtyt.hall, S("t")), keys({{"1", "1", 1, "1"}}));
}

TEST(Tensor, RetractionAndEmbedding) {
  const RingKind z = RingKind::Z;
  const HallElement x = HallElement::generator(kRank2, z, 1), y = HallElement::generator(kRank2, z, 2);
  EXPECT_EQ(embed(x).hall, x);
  EXPECT_TRUE(embed(x).d.is_zero());
  EXPECT_EQ(embed(hall_mul(y, x)).hall, hall({Scalar(z, 1), Scalar(z, 1)}, {Scalar(z, 1)}, z).hall);
  EXPECT_EQ(embed(hall_commutator(y, x)).hall, hall({Scalar(z, 0), Scalar(z, 0)}, {Scalar(z, 1)}, z).hall);
  HallElement half = HallElement::identity(kRank2, RingKind::Q);
  half.a[0] = Scalar::from_rational(RingKind::Q, Rational(1, 2));
  try {
    embed(half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegerInput);
  }
  const TensorElement k{HallElement::identity(kRank2, RingKind::QtPoly), keys({{"1", "1", 0, "1"}})};
  EXPECT_TRUE(mu_retract(k).is_identity());
  EXPECT_FALSE(k.is_identity());
}

TEST(Tensor, FormalStrategyOnRank3) {
  const SchemaPtr s3 = schema_preset("free2", 3);
  const auto s = CReductionStrategy::automatic(s3, RingKind::QtPoly);
  HallElement h = HallElement::identity(s3, RingKind::QtPoly);
  h.a = {S("1"), S("1"), S("1")};
  const TensorElement g = t_exp(s, TensorElement::from_hall(h), S("t"));
  EXPECT_EQ(g.hall, hall_exp(h, S("t")));
  EXPECT_EQ(g.d.size(), 2u);
  EXPECT_EQ(to_string(g.d, {"u1", "u2", "u3"}), "c(u1,u2)_t: 1\nc(u1 u2,u3)_t: 1");
}

class TensorAxioms : public ::testing::TestWithParam<RingKind> {};

TEST_P(TensorAxioms, RGroupAxioms) {
  const auto s = CReductionStrategy::automatic(kRank2, GetParam(), 16);
  const RingKind r = s.ring;
  for (int i = 0; i < 60; ++i) {
    Sampler smp(51, static_cast<std::uint64_t>(i));
    const TensorElement g = random_tensor(smp, s), h = random_tensor(smp, s);
    const Scalar al = smp.scalar(r), be = smp.scalar(r);
    const TensorElement e = TensorElement::identity(kRank2, r);
    EXPECT_EQ(t_exp(s, g, Scalar::one(r)), g);
    EXPECT_TRUE(t_exp(s, g, Scalar::zero(r)).is_identity());
    EXPECT_TRUE(t_exp(s, e, al).is_identity());
    EXPECT_TRUE(t_mul(g, t_inv(g)).is_identity());
    EXPECT_EQ(t_exp(s, g, al + be), t_mul(t_exp(s, g, al), t_exp(s, g, be)));
    EXPECT_EQ(t_exp(s, t_exp(s, g, al), be), t_exp(s, g, al * be));
    const TensorElement conj = t_mul(t_mul(t_inv(h), g), h);
    EXPECT_EQ(t_exp(s, conj, al), t_mul(t_mul(t_inv(h), t_exp(s, g, al)), h));
    const auto [u, v] = random_commuting_pair(smp, s);
    EXPECT_TRUE(t_commutator(u, v).is_identity());
    EXPECT_EQ(t_exp(s, t_mul(u, v), al), t_mul(t_exp(s, u, al), t_exp(s, v, al)));
    // D-part of exponentiation beyond al * d is the c-commutator of the coordinates.
    EXPECT_EQ(t_exp(s, g, al).d - al * g.d, exp_defect(s, g.hall, al));
    EXPECT_EQ(mu_retract(t_mul(g, h)), hall_mul(mu_retract(g), mu_retract(h)));
    EXPECT_EQ(mu_retract(t_exp(s, g, al)), hall_exp(mu_retract(g), al));
    if (r == RingKind::Z || r == RingKind::Q) EXPECT_TRUE(t_exp(s, g, al).d.is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, TensorAxioms,
                         ::testing::Values(RingKind::Z, RingKind::Q, RingKind::QtPoly, RingKind::QtField));

}  // namespace
}  // namespace nil2
