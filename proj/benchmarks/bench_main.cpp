#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rotwidth/finegraph/chain_bound.hpp"
#include "rotwidth/lattice/geometry.hpp"
#include "rotwidth/lattice/random_polygon.hpp"
#include "rotwidth/torus/rotation_set.hpp"

namespace {

using namespace rotwidth;

void BM_EssentialWidth(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<lattice::ConvexPolygonQ> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(lattice::random_polygon(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice::essential_width(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_EssentialWidth);

void BM_EssentialWidthSkewed(benchmark::State& state) {
  // Image of the unit square under a large unimodular matrix.
  const auto n = state.range(0);
  const lattice::UnimodularMatrix m(1, n, 0, 1);
  const lattice::UnimodularMatrix m2 = m * lattice::UnimodularMatrix(1, 0, n, 1);
  std::vector<lattice::Point2Q> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto c = lattice::apply_unimodular(m2, lattice::convex_hull(sq));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::essential_width(c));
}
BENCHMARK(BM_EssentialWidthSkewed)->Arg(10)->Arg(1000)->Arg(100000);

void BM_RotationSet(benchmark::State& state) {
  torus::RotationSetOptions o;
  o.grid = static_cast<int>(state.range(0));
  o.iterates = 500;
  o.threads = 1;
  const auto f = torus::MapExpr::vn_hn(2);
  for (auto _ : state) benchmark::DoNotOptimize(torus::rotation_set_estimate(f, o));
}
BENCHMARK(BM_RotationSet)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ChainBound(benchmark::State& state) {
  const auto profile = torus::Profile::sin_sq();
  for (auto _ : state) {
    benchmark::DoNotOptimize(finegraph::chain_bound_vnhn(state.range(0), profile));
  }
}
BENCHMARK(BM_ChainBound)->Arg(1)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
