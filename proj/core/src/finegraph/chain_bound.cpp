#include "rotwidth/finegraph/chain_bound.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <variant>
#include <vector>

#include "rotwidth/finegraph/curves.hpp"

namespace rotwidth::finegraph {

namespace {

using torus::MapExpr;

void flatten(const MapExpr& e, std::vector<MapExpr>& out) {
  if (const auto* c = std::get_if<torus::Compose>(&e.node())) {
    for (const MapExpr& f : c->factors) flatten(f, out);
  } else {
    out.push_back(e);
  }
}

std::string render(const std::vector<MapExpr>& factors) {
  if (factors.empty()) return "id";
  return MapExpr::compose(factors).str();
}

// Largest deviation of r(x, 0) from (x, 0) on the torus, in units of
// eps * max(1, |x|).
double fix_residual(const MapExpr& r, std::int64_t samples) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  double worst = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(samples);
    const Vec2 y = r({x, 0.0});
    double dx = y.x - x, dy = y.y;
    dx -= std::nearbyint(dx);
    dy -= std::nearbyint(dy);
    worst = std::max(worst, std::max(std::fabs(dx), std::fabs(dy)) / kEps);
  }
  return worst;
}

}  // namespace

ChainBoundReport chain_bound(const MapExpr& f, const ChainOptions& opts) {
  if (opts.fix_samples < 1 || opts.curve_vertices < 3) {
    throw std::invalid_argument("chain options need positive sample counts");
  }
  std::vector<MapExpr> factors;
  flatten(f, factors);
  std::size_t split = 0;
  while (split < factors.size() && std::holds_alternative<torus::VShear>(factors[split].node())) {
    ++split;
  }
  const std::vector<MapExpr> vertical(factors.begin(), factors.begin() + split);
  const std::vector<MapExpr> fixing(factors.begin() + split, factors.end());

  ChainBoundReport rep;
  rep.vertical_part = render(vertical);
  rep.fixing_part = render(fixing);
  rep.fix_samples = opts.fix_samples;
  rep.fix_residual = fixing.empty() ? 0.0 : fix_residual(MapExpr::compose(fixing), opts.fix_samples);
  if (rep.fix_residual > opts.fix_ulps) {
    std::ostringstream os;
    os << "'" << rep.fixing_part << "' does not fix the horizontal curve: deviation "
       << rep.fix_residual << " ulp";
    throw ChainVerificationError(os.str(), -1, rep.fix_residual);
  }

  // f(alpha) as a polyline through images of alpha's sample points.
  const std::int64_t m = opts.curve_vertices;
  std::vector<Vec2> image;
  image.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    image.push_back(f({static_cast<double>(i) / static_cast<double>(m), 0.0}));
  }
  const Vec2 shift = f({1.0, 0.0}) - image.front();
  const RealizedCurve f_alpha = RealizedCurve::from_samples(image, shift, "image " + f.str());

  const RealizedCurve alpha = RealizedCurve::straight({1, 0}, {Rational(0), Rational(0)});
  const RealizedCurve beta = RealizedCurve::straight({0, 1}, {Rational(1, 3), Rational(0)});

  const std::int64_t first = crossing_count(alpha, beta);
  if (first != 1) {
    throw ChainVerificationError("reference curves cross " + std::to_string(first) + " times",
                                 first, rep.fix_residual);
  }
  rep.crossing_count = crossing_count(f_alpha, beta);
  if (rep.crossing_count != 1) {
    throw ChainVerificationError("image of the horizontal curve meets the vertical curve " +
                                     std::to_string(rep.crossing_count) + " times",
                                 rep.crossing_count, rep.fix_residual);
  }
  rep.bound = {TranslationLengthBound::Kind::kUpper, Rational(2),
               TranslationLengthBound::Source::kAdjacencyChain};
  return rep;
}

ChainBoundReport chain_bound_vnhn(std::int64_t n, const torus::Profile& profile,
                                  const ChainOptions& opts) {
  if (n < 1) throw std::invalid_argument("chain bound needs n >= 1");
  return chain_bound(MapExpr::vn_hn(n, profile), opts);
}

}  // namespace rotwidth::finegraph
