#pragma once

// Sample points on the unit square [0, 1)^2.

#include <cstdint>
#include <vector>

#include "rotwidth/planar.hpp"

namespace rotwidth::torus {

/// Additive recurrence with the plastic-number generator (the "R2"
/// sequence); low discrepancy in two dimensions. The seed only shifts the
/// starting offset, so distinct seeds give distinct deterministic streams.
class R2Sequence {
 public:
  explicit R2Sequence(std::uint64_t seed = 0);
  Vec2 next();

 private:
  double x_;
  double y_;
};

enum class SamplingScheme { kUniformGrid, kQuasiRandom };

/// G*G points: the grid (i/G, j/G) or the first G*G R2 points.
std::vector<Vec2> sample_points(int grid, SamplingScheme scheme,
                                std::uint64_t seed = 0);

}  // namespace rotwidth::torus
