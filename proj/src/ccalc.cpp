#include "nil2/ccalc.hpp"

#include <functional>

#include "nil2/error.hpp"
#include "nil2/tensor.hpp"

namespace nil2 {

namespace {

using Coords = std::vector<Scalar>;
using Leaf = std::function<DVector(const Coords&, const Coords&)>;

bool all_zero(const Coords& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Coords scale(const Coords& v, const Scalar& c) {
  Coords r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(c * x);
  return r;
}

Coords scale(const Coords& v, const Rational& c) {
  Coords r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.scaled(c));
  return r;
}

// Rewrites c(g,h)_lambda down to subscript t:
//   c(g,h)_{sum r_i t^i} = prod c(g^{r_i}, h^{r_i})_{t^i}
//   c(g,h)_{t^i} = c(g^t, h^t)_{t^{i-1}} c(g,h)_t^{t^{i-1}}
//   c(g,h)_{p/q} = c(g^{1/q}, h^{1/q})_p c(g,h)_{1/q}^p
//   c(g,h)_{1/q} = c(g^{1/q}, h^{1/q})_q^{-1/q}
class Reducer {
 public:
  Reducer(RingKind ring, SubscriptSplit split, Leaf leaf) : ring_(ring), split_(split), leaf_(std::move(leaf)) {}

  DVector reduce(const Coords& g, const Coords& h, const Scalar& lambda) const {
    if (all_zero(g) || all_zero(h) || as_rational(lambda)) return DVector(ring_);
    const RatFun f = lambda.to_ratfun();
    DVector out(ring_);
    if (f.is_polynomial()) {
      const Poly& p = f.num();
      for (int i = 1; i <= p.degree(); ++i)
        if (const Rational& r = p.coeff(i); r != 0) out += mono(scale(g, r), scale(h, r), static_cast<unsigned>(i));
      return out;
    }
    const Scalar q = Scalar::from_poly(ring_, f.den());
    const Scalar p = Scalar::from_poly(ring_, f.num());
    const Scalar qinv = q.inverse();
    const Coords gq = scale(g, qinv), hq = scale(h, qinv);
    out += reduce(gq, hq, p);
    out -= (p * qinv) * reduce(gq, hq, q);
    return out;
  }

 private:
  Scalar t_power(unsigned k) const { return Scalar::from_poly(ring_, Poly::monomial(1, k)); }

  DVector mono(const Coords& g, const Coords& h, unsigned i) const {
    if (i == 1) return leaf_(g, h);
    if (split_ == SubscriptSplit::TFirst) {
      const Scalar t = t_power(1);
      return mono(scale(g, t), scale(h, t), i - 1) + t_power(i - 1) * leaf_(g, h);
    }
    const Scalar s = t_power(i - 1);
    return leaf_(scale(g, s), scale(h, s)) + t_power(1) * mono(g, h, i - 1);
  }

  RingKind ring_;
  SubscriptSplit split_;
  Leaf leaf_;
};

DVector poly_leaf(RingKind ring, const Scalar& alpha, const Scalar& beta) {
  const PolyPair pp = canonical_pair_poly(std::get<Poly>(alpha.value()), std::get<Poly>(beta.value()));
  DVector out(ring);
  for (int i = 0; i <= pp.gamma.degree(); ++i)
    if (pp.gamma.coeff(i) != 0)
      out.add_term(CKeyPoly{pp.alpha0, pp.beta0, static_cast<unsigned>(i)},
                   Scalar::from_rational(ring, pp.gamma.coeff(i)));
  return out;
}

DVector field_leaf(const CReductionStrategy& s, const Scalar& alpha, const Scalar& beta) {
  const FieldPair fp = canonical_pair_field(alpha.to_ratfun(), beta.to_ratfun());
  DVector out(s.ring);
  for (const auto& [elem, q] :
       additive_decompose(Scalar::from_ratfun(RingKind::QtField, fp.gamma), s.factor_degree_bound)) {
    if (s.s_basis == SBasisMode::Paper && elem == SBasisElem(Monomial{1}))
      throw Error(ErrorKind::BasisNotSpanning, "the paper basis of Q(t) omits t, needed for " + fp.gamma.to_string());
    out.add_term(CKeyField{elem, fp.beta_hat}, Scalar::from_rational(s.ring, q));
  }
  return out;
}

void check_ring(const CReductionStrategy& s, const Scalar& x) {
  if (x.kind() != s.ring) throw Error(ErrorKind::MixedRings, "scalar is not in the strategy ring");
}

}  // namespace

CReductionStrategy CReductionStrategy::automatic(SchemaPtr schema, RingKind ring, int factor_degree_bound) {
  StrategyKind kind = StrategyKind::FormalGeneric;
  if (schema->is_free_rank2() && ring == RingKind::QtPoly) kind = StrategyKind::PolyRank2;
  if (schema->is_free_rank2() && ring == RingKind::QtField) kind = StrategyKind::FieldRank2;
  return make(kind, std::move(schema), ring, factor_degree_bound);
}

CReductionStrategy CReductionStrategy::make(StrategyKind kind, SchemaPtr schema, RingKind ring,
                                            int factor_degree_bound) {
  if (kind == StrategyKind::PolyRank2 && !(ring == RingKind::QtPoly && schema->is_free_rank2()))
    throw Error(ErrorKind::StrategyMismatch, "PolyRank2 needs the free rank-2 schema over Q[t]");
  if (kind == StrategyKind::FieldRank2 && !(ring == RingKind::QtField && schema->is_free_rank2()))
    throw Error(ErrorKind::StrategyMismatch, "FieldRank2 needs the free rank-2 schema over Q(t)");
  CReductionStrategy s;
  s.kind = kind;
  s.ring = ring;
  s.schema = std::move(schema);
  s.factor_degree_bound = factor_degree_bound;
  return s;
}

DVector ccoord(const CReductionStrategy& s, const Scalar& alpha, const Scalar& beta, const Scalar& lambda,
               SubscriptSplit split) {
  check_ring(s, alpha);
  check_ring(s, beta);
  check_ring(s, lambda);
  if (s.kind == StrategyKind::FormalGeneric) {
    if (s.schema->m() < 2) throw Error(ErrorKind::StrategyMismatch, "schema has fewer than two generators");
    Coords g(s.schema->m(), Scalar::zero(s.ring)), h = g;
    g[0] = alpha;
    h[1] = beta;
    return ccoord_formal(s, g, h, lambda);
  }
  Leaf leaf;
  if (s.kind == StrategyKind::PolyRank2)
    leaf = [&](const Coords& g, const Coords& h) { return poly_leaf(s.ring, g[0], h[0]); };
  else
    leaf = [&](const Coords& g, const Coords& h) { return field_leaf(s, g[0], h[0]); };
  return Reducer(s.ring, split, leaf).reduce({alpha}, {beta}, lambda);
}

DVector ccoord_formal(const CReductionStrategy& s, std::span<const Scalar> g, std::span<const Scalar> h,
                      const Scalar& lambda) {
  check_ring(s, lambda);
  const Scalar t = s.ring == RingKind::QtPoly || s.ring == RingKind::QtField ? Scalar::t(s.ring) : Scalar();
  Leaf leaf = [&](const Coords& a, const Coords& b) {
    return DVector::single(s.ring, FormalCKey{a, b, t}, Scalar::one(s.ring));
  };
  return Reducer(s.ring, SubscriptSplit::TFirst, leaf).reduce(Coords(g.begin(), g.end()), Coords(h.begin(), h.end()),
                                                              lambda);
}

DVector c_binary(const CReductionStrategy& s, const TensorElement& g, const TensorElement& h, const Scalar& lambda) {
  if (!s.canonical()) throw Error(ErrorKind::StrategyMismatch, "c_binary needs a rank-2 strategy");
  const auto& a = g.hall.a;
  const auto& b = h.hall.a;
  return ccoord(s, a[0] + b[0], a[1] + b[1], lambda) - ccoord(s, a[0], a[1], lambda) - ccoord(s, b[0], b[1], lambda);
}

DVector c_multi(const CReductionStrategy& s, std::span<const TensorElement> xs, const Scalar& lambda) {
  if (!s.canonical()) throw Error(ErrorKind::StrategyMismatch, "c_multi needs a rank-2 strategy");
  DVector out(s.ring);
  if (xs.empty()) return out;
  TensorElement prefix = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    out += c_binary(s, prefix, xs[i], lambda);
    prefix = t_mul(prefix, xs[i]);
  }
  return out;
}

}  // namespace nil2
