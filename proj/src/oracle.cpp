#include "nil2/oracle.hpp"

#include "nil2/error.hpp"

namespace nil2::oracle {

UniMat3 mat_pow(const UniMat3& m, long k) {
  UniMat3 base = k < 0 ? m.inverse() : m;
  UniMat3 r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

UniMat3 commutator_matrix() {
  const UniMat3 x = x_matrix(), y = y_matrix();
  return y.inverse() * x.inverse() * y * x;
}

Integer integer_value(const Scalar& s) {
  auto q = as_rational(s);
  if (!q || q->get_den() != 1) throw Error(ErrorKind::NonIntegerInput, s.to_string() + " is not an integer");
  return q->get_num();
}

namespace {

void require_rank2(const HallElement& g) {
  if (!g.schema->is_free_rank2())
    throw Error(ErrorKind::SchemaMismatch, "the matrix model covers the rank-2 free schema only");
}

}  // namespace

UniMat3 matrix_model(const HallElement& g) {
  require_rank2(g);
  const Integer a = integer_value(g.a[0]);
  const Integer b = integer_value(g.a[1]);
  const Integer c = integer_value(g.b[0]);
  const Integer s = commutator_matrix().a13;
  return {a, a * b + s * c, b};
}

HallElement from_matrix(const UniMat3& m, SchemaPtr schema, RingKind ring) {
  const Integer s = commutator_matrix().a13;
  HallElement g = HallElement::identity(std::move(schema), ring);
  require_rank2(g);
  g.a[0] = Scalar::from_rational(ring, Rational(m.a12));
  g.a[1] = Scalar::from_rational(ring, Rational(m.a23));
  g.b[0] = Scalar::from_rational(ring, Rational(Integer((m.a13 - m.a12 * m.a23) / s)));
  return g;
}

HallElement int_exp_oracle(const HallElement& g, long k, long max_abs) {
  if (k > max_abs || k < -max_abs)
    throw Error(ErrorKind::NonIntegerInput, "oracle exponent outside [-" + std::to_string(max_abs) + ", " +
                                                std::to_string(max_abs) + "]");
  for (const auto& x : g.a) (void)integer_value(x);
  for (const auto& x : g.b) (void)integer_value(x);
  const HallElement base = k < 0 ? hall_inv(g) : g;
  HallElement r = HallElement::identity(g.schema, g.ring);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = hall_mul(r, base);
  return r;
}

}  // namespace nil2::oracle
