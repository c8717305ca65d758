#pragma once

// Numerical rotation-set estimates.
//
// The inner hull collects rotation-vector estimates of orbits that pass a
// convergence proxy; extreme points of a rotation set are realised by
// orbits, so it approaches the set from inside for the shear examples. The
// outer hull is a heuristic (not certified) dilation of all finite-time
// averages.

#include <cstdint>

#include "rotwidth/lattice/geometry.hpp"
#include "rotwidth/torus/map_expr.hpp"
#include "rotwidth/torus/sampling.hpp"

namespace rotwidth::torus {

struct RotationSetOptions {
  int grid = 64;                 // G: G*G base points, G >= 2
  std::int64_t iterates = 1000;  // n >= 1
  SamplingScheme scheme = SamplingScheme::kUniformGrid;
  std::uint64_t seed = 0;
  unsigned threads = 0;          // 0: hardware concurrency
  double convergence_ratio = 1e-2;
};

struct RotationSetEstimate {
  lattice::ConvexPolygonQ inner_hull;
  lattice::ConvexPolygonQ outer_hull;
  int grid = 0;
  std::int64_t iterates = 0;
  SamplingScheme scheme = SamplingScheme::kUniformGrid;
  std::uint64_t seed = 0;
  double max_spread = 0.0;    // largest trailing-window spread over samples
  double step_bound = 0.0;    // largest one-step displacement component
  std::size_t samples = 0;
  std::size_t converged = 0;  // samples admitted to the inner hull
  bool certified = false;     // always false: the outer hull is a proxy
};

/// Throws std::invalid_argument when grid < 2 or iterates < 1.
RotationSetEstimate rotation_set_estimate(const MapExpr& e,
                                          const RotationSetOptions& opts);

struct PowerScalingReport {
  RotationSetEstimate power;  // estimate of e^k with n iterates
  RotationSetEstimate base;   // estimate of e with k*n iterates
  lattice::ConvexPolygonQ scaled_base;  // k * base.inner_hull
  double distance = 0.0;      // Hausdorff(power.inner_hull, scaled_base)
};

PowerScalingReport power_scaling_check(const MapExpr& e, std::int64_t k,
                                       const RotationSetOptions& opts);

}  // namespace rotwidth::torus
