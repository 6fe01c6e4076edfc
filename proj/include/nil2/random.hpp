#pragma once

#include <cstdint>
#include <random>

#include "nil2/scalar.hpp"

namespace nil2 {

struct SamplerLimits {
  int max_degree = 4;
  long max_numerator = 10;
  long max_denominator = 10;
  // Q(t) denominators: product of up to this many monic factors ...
  int max_den_factors = 2;
  // ... each of degree at most this.
  int max_factor_degree = 2;
  // Percent chance that a sampled scalar is zero.
  int zero_percent = 10;
};

// Deterministic scalar sampler. Each stream is an mt19937_64 seeded from
// (seed, stream index) through splitmix64, so case i of a run is
// reproducible on its own.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream, SamplerLimits limits = {});

  long integer(long lo, long hi);
  bool chance(int percent) { return integer(0, 99) < percent; }
  Rational rational();
  Rational nonzero_rational();
  Poly poly(int max_degree);
  Poly nonzero_poly(int max_degree);
  Poly monic_factor();
  RatFun ratfun();
  Scalar scalar(RingKind ring);
  Scalar nonzero_scalar(RingKind ring);
  // Integer-valued scalar in [lo, hi] for any ring.
  Scalar small_integer(RingKind ring, long lo, long hi);

  const SamplerLimits& limits() const { return limits_; }

 private:
  std::mt19937_64 rng_;
  SamplerLimits limits_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace nil2
