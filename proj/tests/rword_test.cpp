#include <gtest/gtest.h>

#include "nil2/error.hpp"
#include "nil2/generators.hpp"
#include "nil2/rword.hpp"
#include "nil2/scalar_parser.hpp"

namespace nil2 {
namespace {

const SchemaPtr kRank2 = schema_preset("free2", 2);
const CReductionStrategy kPoly = CReductionStrategy::automatic(kRank2, RingKind::QtPoly);
const CReductionStrategy kField = CReductionStrategy::automatic(kRank2, RingKind::QtField);

TensorElement E(const char* text, const CReductionStrategy& s = kPoly) {
  return eval(parse_word(text, *s.schema, s.ring), s);
}

std::string NF(const char* text, const CReductionStrategy& s = kPoly) { return print_normal_form(E(text, s)); }

void expect_error(const char* text, ErrorKind kind, std::size_t pos, RingKind ring = RingKind::QtPoly) {
  try {
    parse_word(text, *kRank2, ring);
    ADD_FAILURE() << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << text << ": " << e.what();
    EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
  }
}

TEST(Parse, Structure) {
  RWordPtr w = parse_word("(x*y)^(t^2+1)", *kRank2, RingKind::QtPoly);
  ASSERT_EQ(w->kind, RWord::Kind::Exp);
  EXPECT_EQ(w->scalar, parse_scalar("t^2+1", RingKind::QtPoly));
  ASSERT_EQ(w->args[0]->kind, RWord::Kind::Mul);
  ASSERT_EQ(w->args[0]->args.size(), 2u);
  EXPECT_EQ(w->args[0]->args[0]->index, 1);
  EXPECT_EQ(w->args[0]->args[1]->index, 2);

  w = parse_word("[y,x]^t", *kRank2, RingKind::QtPoly);
  ASSERT_EQ(w->kind, RWord::Kind::Exp);
  ASSERT_EQ(w->args[0]->kind, RWord::Kind::Comm);
  EXPECT_EQ(w->args[0]->args[0]->index, 2);
  EXPECT_EQ(w->args[0]->args[1]->index, 1);

  w = parse_word(" x  y ^ -1 ", *kRank2, RingKind::Z);
  ASSERT_EQ(w->kind, RWord::Kind::Mul);
  EXPECT_EQ(w->args[1]->scalar, Scalar(RingKind::Z, -1));

  w = parse_word("c(x, y)_t^{3}", *kRank2, RingKind::QtPoly);
  ASSERT_EQ(w->kind, RWord::Kind::Exp);
  EXPECT_EQ(w->args[0]->kind, RWord::Kind::CComm);

  const SchemaPtr r3 = schema_preset("free2", 3);
  w = parse_word("u1 u3^2 v2", *r3, RingKind::Z);
  ASSERT_EQ(w->kind, RWord::Kind::Mul);
  EXPECT_TRUE(w->args[2]->central);
  EXPECT_EQ(w->args[2]->index, 2);
}

TEST(Parse, Errors) {
  expect_error("x^(1/(t-1))", ErrorKind::ScalarNotInRing, 5);
  expect_error("x*z", ErrorKind::UnknownGenerator, 3);
  expect_error("u3", ErrorKind::UnknownGenerator, 1);
  expect_error("x^", ErrorKind::SyntaxError, 3);
  expect_error("(x*y", ErrorKind::SyntaxError, 5);
  expect_error("x^t^2", ErrorKind::SyntaxError, 4);
  expect_error("[x y]", ErrorKind::SyntaxError, 5);
  expect_error("x)", ErrorKind::SyntaxError, 2);
  expect_error("", ErrorKind::SyntaxError, 1);
  expect_error("x^t", ErrorKind::ScalarNotInRing, 3, RingKind::Q);
  EXPECT_NO_THROW(parse_word("x^(1/(t-1))", *kRank2, RingKind::QtField));
}

TEST(Eval, Examples) {
  EXPECT_EQ(NF("(x*y)^t"), "x^{t} y^{t} [y,x]^{(t^2-t)/2} * c(x,y)_t^{1}");
  EXPECT_EQ(NF("(x*y)^(t^2+1)"), "x^{t^2+1} y^{t^2+1} [y,x]^{(t^4+t^2)/2} * c(x,y)_t^{t} c(x^t,y^t)_t^{1}");
  EXPECT_EQ(NF("x*x^-1"), "1");
  EXPECT_EQ(NF("x^0"), "1");
  EXPECT_EQ(NF("x"), "x");
  EXPECT_EQ(NF("y*x"), "x y [y,x]");
  EXPECT_EQ(NF("[y,x]"), "[y,x]");
  EXPECT_EQ(NF("[x,y]"), "[y,x]^{-1}");
  EXPECT_EQ(NF("(x*y)^2", CReductionStrategy::automatic(kRank2, RingKind::Z)), "x^{2} y^{2} [y,x]");
  EXPECT_EQ(NF("c(x,y)_t"), "c(x,y)_t^{1}");
  EXPECT_EQ(NF("c(x,y)_(3/4)"), "1");

  const TensorElement g = E("((x^t)*(y^t))^t");
  const TensorElement hall_only = TensorElement::from_hall(hall_exp(g.hall, Scalar::one(RingKind::QtPoly)));
  DVector expected(RingKind::QtPoly);
  expected.add_term(CKeyPoly{Poly(1), Poly(1), 1}, Scalar::one(RingKind::QtPoly));
  EXPECT_EQ(t_mul(g, t_inv(hall_only)).d, expected);

  EXPECT_EQ(NF("x^(1/(t-1)) y", kField), "x^{1/(t-1)} y");
  EXPECT_EQ(NF("c(x^(1/(t-1)),y)_t", kField), "c(x^{1/(t-1)},y)_t^{1}");
}

TEST(Eval, CCommMatchesGroupOperations) {
  for (const auto* s : {&kPoly, &kField}) {
    for (int i = 0; i < 40; ++i) {
      Sampler smp(61, static_cast<std::uint64_t>(i));
      const RWordPtr g = random_word(smp, *s, 2), h = random_word(smp, *s, 2);
      const Scalar a = smp.scalar(s->ring);
      const TensorElement direct = eval(RWord::ccomm(g, h, a), *s);
      // [g,h]^{C(a,2)} h^-a g^-a (gh)^a
      const RWordPtr route = RWord::mul({RWord::exp(RWord::comm(g, h), binomial(a, 2)),
                                         RWord::inv(RWord::exp(h, a)), RWord::inv(RWord::exp(g, a)),
                                         RWord::exp(RWord::mul({g, h}), a)});
      EXPECT_EQ(direct, eval(route, *s));
    }
  }
}

class WordProperties : public ::testing::TestWithParam<RingKind> {};

TEST_P(WordProperties, RoundTripsAndBracketing) {
  const auto s = CReductionStrategy::automatic(kRank2, GetParam(), 16);
  for (int i = 0; i < 60; ++i) {
    Sampler smp(62, static_cast<std::uint64_t>(i));
    const RWordPtr w = random_word(smp, s, 3);
    const TensorElement g = eval(w, s);
    // Word printer and normal-form printer both parse back.
    EXPECT_EQ(eval(parse_word(to_string(w, *s.schema), *s.schema, s.ring), s), g) << to_string(w, *s.schema);
    const std::string nf = print_normal_form(g);
    EXPECT_EQ(eval(parse_word(nf, *s.schema, s.ring), s), g) << nf;
    const TensorElement r = random_tensor(smp, s);
    EXPECT_EQ(eval(parse_word(print_normal_form(r), *s.schema, s.ring), s), r) << print_normal_form(r);

    const RWordPtr a = random_word(smp, s, 1), b = random_word(smp, s, 1), c = random_word(smp, s, 1);
    const Scalar e = smp.scalar(s.ring);
    EXPECT_EQ(eval(RWord::exp(RWord::mul({RWord::mul({a, b}), c}), e), s),
              eval(RWord::exp(RWord::mul({a, RWord::mul({b, c})}), e), s));
    if (s.ring == RingKind::Z || s.ring == RingKind::Q) EXPECT_TRUE(g.d.is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, WordProperties,
                         ::testing::Values(RingKind::Z, RingKind::Q, RingKind::QtPoly, RingKind::QtField));

}  // namespace
}  // namespace nil2
