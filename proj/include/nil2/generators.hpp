#pragma once

#include <utility>

#include "nil2/random.hpp"
#include "nil2/rword.hpp"
#include "nil2/tensor.hpp"

namespace nil2 {

// Hall coordinates are sampled scalars; the D part is a combination of up
// to two c-commutators with sampled arguments (empty over Z and Q).
HallElement random_hall(Sampler& s, const SchemaPtr& schema, RingKind ring);
DVector random_dvector(Sampler& s, const CReductionStrategy& strategy);
TensorElement random_tensor(Sampler& s, const CReductionStrategy& strategy);
// Central element: zero u-coordinates, sampled v-coordinates and D part.
TensorElement random_central(Sampler& s, const CReductionStrategy& strategy);
// (base^s1 z1, base^s2 z2) with z1, z2 central, so the pair commutes.
std::pair<TensorElement, TensorElement> random_commuting_pair(Sampler& s, const CReductionStrategy& strategy);

// Random R-word of nesting depth at most depth over the strategy's schema and ring.
RWordPtr random_word(Sampler& s, const CReductionStrategy& strategy, int depth);

}  // namespace nil2
