#pragma once

#include <string>

#include "nil2/ccalc.hpp"
#include "nil2/dmodule.hpp"
#include "nil2/hall.hpp"

namespace nil2 {

// (Hall part, D part) of an element of the tensor completion.
struct TensorElement {
  HallElement hall;
  DVector d;

  static TensorElement identity(SchemaPtr schema, RingKind ring);
  static TensorElement from_hall(HallElement h);
  RingKind ring() const { return hall.ring; }
  bool is_identity() const { return hall.is_identity() && d.is_zero(); }
  friend bool operator==(const TensorElement& g, const TensorElement& h) {
    return g.hall == h.hall && g.d == h.d;
  }
};

TensorElement t_mul(const TensorElement& g, const TensorElement& h);
TensorElement t_inv(const TensorElement& g);
TensorElement t_exp(const CReductionStrategy& strategy, const TensorElement& g, const Scalar& mu);
// g^-1 h^-1 g h; the D parts cancel.
TensorElement t_commutator(const TensorElement& g, const TensorElement& h);
HallElement mu_retract(const TensorElement& g);
// An element of the discrete group. NonIntegerInput unless all coordinates
// are integers.
TensorElement embed(const HallElement& g);

// D-increment of exponentiation: the c-commutator c(u_1^{a_1}, ..., u_m^{a_m})_mu.
DVector exp_defect(const CReductionStrategy& strategy, const HallElement& g, const Scalar& mu);

}  // namespace nil2
