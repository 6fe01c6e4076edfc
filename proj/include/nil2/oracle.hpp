#pragma once

#include "nil2/hall.hpp"

namespace nil2::oracle {

// Upper unitriangular 3x3 integer matrix [[1,a12,a13],[0,1,a23],[0,0,1]].
struct UniMat3 {
  Integer a12 = 0, a13 = 0, a23 = 0;

  friend UniMat3 operator*(const UniMat3& x, const UniMat3& y) {
    return {x.a12 + y.a12, x.a13 + x.a12 * y.a23 + y.a13, x.a23 + y.a23};
  }
  UniMat3 inverse() const { return {-a12, a12 * a23 - a13, -a23}; }
  friend bool operator==(const UniMat3&, const UniMat3&) = default;
};

UniMat3 mat_pow(const UniMat3& m, long k);

// Images of x and y; [y,x] is whatever y^-1 x^-1 y x evaluates to.
inline UniMat3 x_matrix() { return {1, 0, 0}; }
inline UniMat3 y_matrix() { return {0, 0, 1}; }
UniMat3 commutator_matrix();

// x^a y^b [y,x]^c as a matrix. Rank-2 schema, integer coordinates;
// NonIntegerInput otherwise.
UniMat3 matrix_model(const HallElement& g);
HallElement from_matrix(const UniMat3& m, SchemaPtr schema, RingKind ring);

// k-fold product of g (inverse for k < 0) by repeated hall_mul.
HallElement int_exp_oracle(const HallElement& g, long k, long max_abs = 8);

// The integer value of a scalar, or NonIntegerInput.
Integer integer_value(const Scalar& s);

}  // namespace nil2::oracle
