#pragma once

#include <span>
#include <string>
#include <vector>

#include "nil2/scalar.hpp"
#include "nil2/schema.hpp"

namespace nil2 {

// u^a v^b in Mal'tsev coordinates over the active ring: an element of the
// Hall completion.
struct HallElement {
  SchemaPtr schema;
  RingKind ring = RingKind::Z;
  std::vector<Scalar> a;  // length m
  std::vector<Scalar> b;  // length n

  static HallElement identity(SchemaPtr schema, RingKind ring);
  // u_i, 1-based.
  static HallElement generator(SchemaPtr schema, RingKind ring, int i);
  // v_j, 1-based.
  static HallElement central(SchemaPtr schema, RingKind ring, int j);

  bool is_identity() const;
  bool is_central() const;

  friend bool operator==(const HallElement& g, const HallElement& h);
};

// sum over i > j of k(i,j) * x_i * y_j. Throws LengthMismatch.
std::vector<Scalar> sigma(std::span<const Scalar> x, std::span<const Scalar> y, const GroupSchema& schema);

HallElement hall_mul(const HallElement& g, const HallElement& h);
HallElement hall_inv(const HallElement& g);
// (mu a, mu b + C(mu,2) sigma(a, a)).
HallElement hall_exp(const HallElement& g, const Scalar& mu);
// g^-1 h^-1 g h
HallElement hall_commutator(const HallElement& g, const HallElement& h);
// prod_{i=1}^{n-1} [x_1 ... x_i, x_{i+1}]
HallElement tau2(std::span<const HallElement> xs);

std::string to_string(const HallElement& g);

}  // namespace nil2
