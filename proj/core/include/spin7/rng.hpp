#pragma once

#include <cstdint>
#include <random>

#include "spin7/metric.hpp"

namespace spin7 {

// Deterministic random source.  The engine is mt19937_64 and every
// distribution on top of it is written out explicitly, so a given seed
// produces the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random mantissa bits.
  double uniform();

  // Standard normal via Box-Muller; generates values in pairs.
  double gaussian();

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Haar-distributed rotation in SO(8): QR of a Gaussian matrix with the
// R-diagonal sign fix, then a final column flip if the determinant is -1.
Matrix8 random_rotation(Rng& rng);

}  // namespace spin7
