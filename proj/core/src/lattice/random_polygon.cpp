#include "rotwidth/lattice/random_polygon.hpp"

#include <stdexcept>
#include <vector>

namespace rotwidth::lattice {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace

ConvexPolygonQ random_polygon(std::mt19937_64& rng, const RandomPolygonOptions& opts) {
  if (opts.min_points < 3 || opts.max_points < opts.min_points || opts.max_denominator < 1 ||
      opts.bound < 1) {
    throw std::invalid_argument("bad random polygon options");
  }
  for (;;) {
    const auto n = static_cast<int>(uniform(rng, opts.min_points, opts.max_points));
    std::vector<Point2Q> pts;
    for (int i = 0; i < n; ++i) {
      const std::int64_t dx = uniform(rng, 1, opts.max_denominator);
      const std::int64_t dy = uniform(rng, 1, opts.max_denominator);
      pts.push_back({Rational(uniform(rng, -opts.bound * dx, opts.bound * dx), dx),
                     Rational(uniform(rng, -opts.bound * dy, opts.bound * dy), dy)});
    }
    ConvexPolygonQ c = convex_hull(pts);
    if (c.dimension() == 2) return c;
  }
}

}  // namespace rotwidth::lattice
