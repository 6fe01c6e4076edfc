#include "nil2/random.hpp"

namespace nil2 {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream, SamplerLimits limits)
    : rng_(splitmix64(seed ^ splitmix64(stream))), limits_(limits) {}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational() {
  Rational q(integer(-limits_.max_numerator, limits_.max_numerator), integer(1, limits_.max_denominator));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational() {
  Rational q;
  do q = rational();
  while (q == 0);
  return q;
}

Poly Sampler::poly(int max_degree) {
  const int d = static_cast<int>(integer(0, max_degree));
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(chance(30) ? Rational(0) : rational());
  return Poly(std::move(c));
}

Poly Sampler::nonzero_poly(int max_degree) {
  Poly p;
  do p = poly(max_degree);
  while (p.is_zero());
  return p;
}

Poly Sampler::monic_factor() {
  const int d = static_cast<int>(integer(1, limits_.max_factor_degree));
  std::vector<Rational> c;
  for (int i = 0; i < d; ++i) c.push_back(rational());
  c.emplace_back(1);
  return Poly(std::move(c));
}

RatFun Sampler::ratfun() {
  Poly num = poly(limits_.max_degree);
  Poly den(1);
  const long k = integer(0, limits_.max_den_factors);
  for (long i = 0; i < k; ++i) den *= monic_factor();
  return RatFun(std::move(num), std::move(den));
}

Scalar Sampler::scalar(RingKind ring) {
  if (chance(limits_.zero_percent)) return Scalar::zero(ring);
  switch (ring) {
    case RingKind::Z: return Scalar(ring, integer(-limits_.max_numerator, limits_.max_numerator));
    case RingKind::Q: return Scalar::from_rational(ring, rational());
    case RingKind::QtPoly: return Scalar::from_poly(ring, poly(limits_.max_degree));
    case RingKind::QtField: return Scalar::from_ratfun(ring, ratfun());
  }
  return {};
}

Scalar Sampler::nonzero_scalar(RingKind ring) {
  Scalar s;
  do s = scalar(ring);
  while (s.is_zero());
  return s;
}

Scalar Sampler::small_integer(RingKind ring, long lo, long hi) { return Scalar(ring, integer(lo, hi)); }

}  // namespace nil2
