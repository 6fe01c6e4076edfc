#pragma once

#include <utility>
#include <vector>

#include "nil2/poly.hpp"

namespace nil2 {

inline constexpr int kDefaultFactorDegreeBound = 6;

struct Factorization {
  Rational unit;
  // Monic irreducible factors with multiplicities, ascending by compare().
  std::vector<std::pair<Poly, unsigned>> factors;
};

// Yun decomposition: a = lead(a) * prod s_i^i with s_i monic squarefree and
// pairwise coprime. Entries with s_i = 1 are omitted.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a);

// Complete factorization over Q. Throws ZeroInput for a = 0 and
// FactorDegreeExceeded if an irreducible factor of degree > max_deg occurs.
Factorization poly_factor_bounded(const Poly& a, int max_deg = kDefaultFactorDegreeBound);

}  // namespace nil2
