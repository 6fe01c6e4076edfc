#include "nil2/generators.hpp"

namespace nil2 {

HallElement random_hall(Sampler& s, const SchemaPtr& schema, RingKind ring) {
  HallElement g = HallElement::identity(schema, ring);
  for (auto& x : g.a) x = s.scalar(ring);
  for (auto& x : g.b) x = s.scalar(ring);
  return g;
}

DVector random_dvector(Sampler& s, const CReductionStrategy& strategy) {
  const RingKind ring = strategy.ring;
  DVector d(ring);
  if (ring == RingKind::Z || ring == RingKind::Q) return d;
  const long terms = s.integer(0, 2);
  for (long i = 0; i < terms; ++i) {
    const Scalar coeff = s.scalar(ring);
    const Scalar alpha = s.nonzero_scalar(ring), beta = s.nonzero_scalar(ring);
    d += coeff * ccoord(strategy, alpha, beta, Scalar::t(ring));
  }
  return d;
}

TensorElement random_tensor(Sampler& s, const CReductionStrategy& strategy) {
  HallElement h = random_hall(s, strategy.schema, strategy.ring);
  return {std::move(h), random_dvector(s, strategy)};
}

TensorElement random_central(Sampler& s, const CReductionStrategy& strategy) {
  HallElement h = HallElement::identity(strategy.schema, strategy.ring);
  for (auto& x : h.b) x = s.scalar(strategy.ring);
  return {std::move(h), random_dvector(s, strategy)};
}

std::pair<TensorElement, TensorElement> random_commuting_pair(Sampler& s, const CReductionStrategy& strategy) {
  const TensorElement base = random_tensor(s, strategy);
  const Scalar s1 = s.scalar(strategy.ring), s2 = s.scalar(strategy.ring);
  TensorElement g = t_mul(t_exp(strategy, base, s1), random_central(s, strategy));
  TensorElement h = t_mul(t_exp(strategy, base, s2), random_central(s, strategy));
  return {std::move(g), std::move(h)};
}

RWordPtr random_word(Sampler& s, const CReductionStrategy& strategy, int depth) {
  const GroupSchema& schema = *strategy.schema;
  const RingKind ring = strategy.ring;
  const long pick = depth <= 0 ? 0 : s.integer(0, 9);
  switch (pick) {
    case 0:
    case 1: {
      const long leaf = s.integer(0, 9);
      if (leaf == 0) return RWord::identity();
      if (leaf == 1) return RWord::gen(static_cast<int>(s.integer(1, schema.n())), true);
      return RWord::gen(static_cast<int>(s.integer(1, schema.m())));
    }
    case 2:
    case 3:
    case 4: {
      std::vector<RWordPtr> factors;
      for (long n = s.integer(2, 3); n > 0; --n) factors.push_back(random_word(s, strategy, depth - 1));
      return RWord::mul(std::move(factors));
    }
    case 5:
    case 6:
      return RWord::exp(random_word(s, strategy, depth - 1), s.scalar(ring));
    case 7:
      return RWord::inv(random_word(s, strategy, depth - 1));
    case 8:
      return RWord::comm(random_word(s, strategy, depth - 1), random_word(s, strategy, depth - 1));
    default:
      return RWord::ccomm(random_word(s, strategy, depth - 1), random_word(s, strategy, depth - 1), s.scalar(ring));
  }
}

}  // namespace nil2
