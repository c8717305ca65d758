#include "rotwidth/torus/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rotwidth::torus {

namespace {

// 1/g and 1/g^2 for the plastic number g (root of x^3 = x + 1).
constexpr double kA1 = 0.7548776662466927;
constexpr double kA2 = 0.5698402909980532;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

R2Sequence::R2Sequence(std::uint64_t seed) : x_(0.5), y_(0.5) {
  if (seed != 0) {
    x_ = unit(splitmix64(seed));
    y_ = unit(splitmix64(seed ^ 0x5bd1e995ULL));
  }
}

Vec2 R2Sequence::next() {
  x_ += kA1;
  y_ += kA2;
  x_ -= std::floor(x_);
  y_ -= std::floor(y_);
  return {x_, y_};
}

std::vector<Vec2> sample_points(int grid, SamplingScheme scheme,
                                std::uint64_t seed) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(grid) * grid);
  if (scheme == SamplingScheme::kUniformGrid) {
    const double g = static_cast<double>(grid);
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) pts.push_back({i / g, j / g});
    }
  } else {
    R2Sequence seq(seed);
    for (int i = 0; i < grid * grid; ++i) pts.push_back(seq.next());
  }
  return pts;
}

}  // namespace rotwidth::torus
