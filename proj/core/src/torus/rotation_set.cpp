#include "rotwidth/torus/rotation_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rotwidth/planar.hpp"

namespace rotwidth::torus {

RotationSetEstimate rotation_set_estimate(const MapExpr& e,
                                          const RotationSetOptions& opts) {
  if (opts.grid < 2) throw std::invalid_argument("grid must be >= 2");
  if (opts.iterates < 1) throw std::invalid_argument("iterates must be >= 1");

  const std::vector<Vec2> base = sample_points(opts.grid, opts.scheme, opts.seed);
  std::vector<RotationVectorEstimate> est(base.size());

  // Each worker fills a disjoint index range, so the result does not depend
  // on the partition.
  unsigned workers = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 64);
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      est[i] = rotation_vector_estimate(e, base[i], opts.iterates);
    }
  };
  if (workers == 1) {
    run(0, base.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (base.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(base.size(), w * chunk);
      const std::size_t hi = std::min(base.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
  }

  RotationSetEstimate out;
  out.grid = opts.grid;
  out.iterates = opts.iterates;
  out.scheme = opts.scheme;
  out.seed = opts.seed;
  out.samples = base.size();

  std::vector<Vec2> all;
  all.reserve(est.size());
  double lox = INFINITY, hix = -INFINITY, loy = INFINITY, hiy = -INFINITY;
  for (const auto& r : est) {
    all.push_back(r.vector);
    lox = std::min(lox, r.vector.x);
    hix = std::max(hix, r.vector.x);
    loy = std::min(loy, r.vector.y);
    hiy = std::max(hiy, r.vector.y);
    out.max_spread = std::max(out.max_spread, r.tail_spread);
    out.step_bound = std::max(out.step_bound, r.step_bound);
  }
  const double diam = std::hypot(hix - lox, hiy - loy);
  const double threshold = opts.convergence_ratio * std::max(diam, 1.0);

  std::vector<Vec2> inner;
  std::size_t tightest = 0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    if (est[i].tail_spread <= threshold) inner.push_back(est[i].vector);
    if (est[i].tail_spread < est[tightest].tail_spread) tightest = i;
  }
  out.converged = inner.size();
  if (inner.empty()) inner.push_back(est[tightest].vector);

  // Reduce in double first, then rebuild exactly from the surviving points.
  std::vector<Vec2> inner_pts;
  for (std::size_t i : hull_indices(inner)) inner_pts.push_back(inner[i]);
  out.inner_hull = exact_hull(inner_pts);

  const double delta = out.step_bound / static_cast<double>(opts.iterates);
  std::vector<Vec2> outer_pts;
  for (std::size_t i : hull_indices(all)) {
    const Vec2 p = all[i];
    for (Vec2 o : {Vec2{-delta, -delta}, Vec2{delta, -delta}, Vec2{delta, delta},
                   Vec2{-delta, delta}}) {
      outer_pts.push_back(p + o);
    }
  }
  // The inner vertices join the outer input so inner is contained in outer
  // exactly, whatever rounding the dilation incurred.
  outer_pts.insert(outer_pts.end(), inner_pts.begin(), inner_pts.end());
  out.outer_hull = exact_hull(outer_pts);
  return out;
}

PowerScalingReport power_scaling_check(const MapExpr& e, std::int64_t k,
                                       const RotationSetOptions& opts) {
  if (k < 1) throw std::invalid_argument("power must be >= 1");
  PowerScalingReport rep{rotation_set_estimate(MapExpr::power(e, k), opts),
                         {},
                         {},
                         0.0};
  RotationSetOptions base_opts = opts;
  base_opts.iterates = opts.iterates * k;
  rep.base = rotation_set_estimate(e, base_opts);
  rep.scaled_base = rep.base.inner_hull.scaled(Rational(k));
  rep.distance = hausdorff_distance(rep.power.inner_hull, rep.scaled_base);
  return rep;
}

}  // namespace rotwidth::torus
