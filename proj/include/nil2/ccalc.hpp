#pragma once

#include <span>
#include <vector>

#include "nil2/dmodule.hpp"
#include "nil2/factor.hpp"
#include "nil2/schema.hpp"

namespace nil2 {

struct TensorElement;

enum class StrategyKind { PolyRank2, FieldRank2, FormalGeneric };

// Std: monomials t^k (k >= 0) and simple fractions. Paper: the same without t.
enum class SBasisMode { Std, Paper };

struct CReductionStrategy {
  StrategyKind kind = StrategyKind::FormalGeneric;
  RingKind ring = RingKind::Z;
  SchemaPtr schema;
  int factor_degree_bound = kDefaultFactorDegreeBound;
  SBasisMode s_basis = SBasisMode::Std;

  // PolyRank2 / FieldRank2 for the free rank-2 schema over Q[t] / Q(t),
  // FormalGeneric otherwise.
  static CReductionStrategy automatic(SchemaPtr schema, RingKind ring,
                                      int factor_degree_bound = kDefaultFactorDegreeBound);
  // Throws StrategyMismatch if the kind is not allowed for (schema, ring).
  static CReductionStrategy make(StrategyKind kind, SchemaPtr schema, RingKind ring,
                                 int factor_degree_bound = kDefaultFactorDegreeBound);

  bool canonical() const { return kind != StrategyKind::FormalGeneric; }
};

// Order in which t^i is split into two factors while reducing subscripts.
enum class SubscriptSplit { TFirst, TLast };

// Normal form of c(x^alpha, y^beta)_lambda in D.
DVector ccoord(const CReductionStrategy& strategy, const Scalar& alpha, const Scalar& beta,
               const Scalar& lambda, SubscriptSplit split = SubscriptSplit::TFirst);

// c(u^g, u^h)_lambda with subscripts reduced to t and arguments left alone.
DVector ccoord_formal(const CReductionStrategy& strategy, std::span<const Scalar> g,
                      std::span<const Scalar> h, const Scalar& lambda);

// c(g, h)_lambda from the x,y-coordinates of the arguments. Rank-2 strategies only.
DVector c_binary(const CReductionStrategy& strategy, const TensorElement& g, const TensorElement& h,
                 const Scalar& lambda);

// sum over i of c(x_1 ... x_i, x_{i+1})_lambda.
DVector c_multi(const CReductionStrategy& strategy, std::span<const TensorElement> xs, const Scalar& lambda);

}  // namespace nil2
