#pragma once

// Seeded generators for the property tests. Everything is drawn from raw
// mt19937_64 output so a seed reproduces the same cases on any platform.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rotwidth/lattice/geometry.hpp"
#include "rotwidth/planar.hpp"
#include "rotwidth/rational.hpp"

namespace rotwidth::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  bool coin() { return (rng_() & 1u) != 0; }

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Rational rational(std::int64_t bound, std::int64_t max_den) {
    const std::int64_t den = range(1, max_den);
    return Rational(range(-bound * den, bound * den), den);
  }

  Rational positive_rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(range(1, max_num), range(1, max_den));
  }

  lattice::Point2Q point(std::int64_t bound, std::int64_t max_den) {
    return {rational(bound, max_den), rational(bound, max_den)};
  }

  lattice::PrimitiveVector primitive(std::int64_t bound) {
    for (;;) {
      const std::int64_t a = range(-bound, bound), b = range(-bound, bound);
      if (std::gcd(a, b) == 1) return {a, b};
    }
  }

  /// Product of `steps` elementary matrices and quarter turns.
  lattice::UnimodularMatrix unimodular(int steps) {
    using lattice::UnimodularMatrix;
    UnimodularMatrix m = UnimodularMatrix::identity();
    for (int i = 0; i < steps; ++i) {
      switch (range(0, 4)) {
        case 0: m = UnimodularMatrix(1, 1, 0, 1) * m; break;
        case 1: m = UnimodularMatrix(1, -1, 0, 1) * m; break;
        case 2: m = UnimodularMatrix(1, 0, 1, 1) * m; break;
        case 3: m = UnimodularMatrix(1, 0, -1, 1) * m; break;
        default: m = UnimodularMatrix(0, -1, 1, 0) * m; break;
      }
    }
    return m;
  }

  Vec2 unit_square_point() { return {unit(), unit()}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rotwidth::testing
