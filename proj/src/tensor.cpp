#include "nil2/tensor.hpp"

#include "nil2/error.hpp"

namespace nil2 {

TensorElement TensorElement::identity(SchemaPtr schema, RingKind ring) {
  return {HallElement::identity(std::move(schema), ring), DVector(ring)};
}

TensorElement TensorElement::from_hall(HallElement h) {
  const RingKind ring = h.ring;
  return {std::move(h), DVector(ring)};
}

TensorElement t_mul(const TensorElement& g, const TensorElement& h) {
  return {hall_mul(g.hall, h.hall), g.d + h.d};
}

TensorElement t_inv(const TensorElement& g) { return {hall_inv(g.hall), -g.d}; }

DVector exp_defect(const CReductionStrategy& s, const HallElement& g, const Scalar& mu) {
  if (!(*s.schema == *g.schema) || s.ring != g.ring)
    throw Error(ErrorKind::StrategyMismatch, "strategy does not match the element's schema or ring");
  if (s.canonical()) return ccoord(s, g.a[0], g.a[1], mu);
  DVector out(s.ring);
  std::vector<Scalar> prefix(g.a.size(), Scalar::zero(s.ring));
  for (std::size_t i = 0; i + 1 < g.a.size(); ++i) {
    prefix[i] = g.a[i];
    if (g.a[i + 1].is_zero()) continue;
    std::vector<Scalar> next(g.a.size(), Scalar::zero(s.ring));
    next[i + 1] = g.a[i + 1];
    out += ccoord_formal(s, prefix, next, mu);
  }
  return out;
}

TensorElement t_exp(const CReductionStrategy& s, const TensorElement& g, const Scalar& mu) {
  DVector d = mu * g.d;
  d += exp_defect(s, g.hall, mu);
  return {hall_exp(g.hall, mu), std::move(d)};
}

TensorElement t_commutator(const TensorElement& g, const TensorElement& h) {
  return TensorElement::from_hall(hall_commutator(g.hall, h.hall));
}

HallElement mu_retract(const TensorElement& g) { return g.hall; }

TensorElement embed(const HallElement& g) {
  auto integral = [](const Scalar& x) {
    const auto q = as_rational(x);
    return q && q->get_den() == 1;
  };
  for (const auto& x : g.a)
    if (!integral(x)) throw Error(ErrorKind::NonIntegerInput, "embedded element needs integer coordinates");
  for (const auto& x : g.b)
    if (!integral(x)) throw Error(ErrorKind::NonIntegerInput, "embedded element needs integer coordinates");
  return TensorElement::from_hall(g);
}

}  // namespace nil2
