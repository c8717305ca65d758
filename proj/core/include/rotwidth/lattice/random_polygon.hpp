#pragma once

#include <cstdint>
#include <random>

#include "rotwidth/lattice/geometry.hpp"

namespace rotwidth::lattice {

struct RandomPolygonOptions {
  int min_points = 3;
  int max_points = 8;
  std::int64_t max_denominator = 8;
  std::int64_t bound = 10;  // coordinates in [-bound, bound]
};

/// Hull of random rational points, redrawn until it is two-dimensional.
/// Uses raw engine output only, so a seed gives the same polygon on every
/// standard library.
ConvexPolygonQ random_polygon(std::mt19937_64& rng, const RandomPolygonOptions& opts = {});

}  // namespace rotwidth::lattice
