#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "rotwidth/planar.hpp"
#include "rotwidth/torus/map_expr.hpp"
#include "rotwidth/torus/map_parser.hpp"
#include "rotwidth/torus/profile.hpp"
#include "rotwidth/torus/rotation_set.hpp"
#include "rotwidth/torus/sampling.hpp"
#include "support/generators.hpp"

namespace rotwidth::torus {
namespace {

using testing::Gen;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// |a - b| in units of the last place of the larger magnitude.
double ulps_apart(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) / (kEps * scale);
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(Profile, SinSqIsExactAtSpecialPoints) {
  const Profile p = Profile::sin_sq();
  EXPECT_EQ(p(0.0), 0.0);
  EXPECT_EQ(p(0.5), 1.0);
  EXPECT_EQ(p(1.0), 0.0);
  EXPECT_EQ(p(-2.5), 1.0);
  EXPECT_NEAR(p(0.25), 0.5, 1e-15);
}

TEST(Profile, PiecewiseLinearValidation) {
  const Profile tent = Profile::piecewise_linear({{0, 0.0}, {Rational(1, 2), 1.0}, {1, 0.0}});
  EXPECT_DOUBLE_EQ(tent(0.25), 0.5);
  EXPECT_DOUBLE_EQ(tent(1.75), 0.5);
  EXPECT_EQ(tent(0.5), 1.0);
  EXPECT_THROW(Profile::piecewise_linear({{0, 0.0}, {1, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Profile::piecewise_linear({{0, 0.1}, {Rational(1, 2), 1.0}, {1, 0.1}}),
               std::invalid_argument);
  EXPECT_THROW(Profile::piecewise_linear({{0, 0.0}, {Rational(1, 4), 1.5}, {Rational(1, 2), 1.0}, {1, 0.0}}),
               std::invalid_argument);
}

TEST(Profile, LoadsFile) {
  const auto path = temp_file("plateau.pl", "# t value\n0 0\n1/4 1\n1/2 1\n3/4 1\n1 0\n");
  const Profile p = Profile::load_piecewise_linear(path);
  EXPECT_EQ(p.kind(), Profile::Kind::kPiecewiseLinear);
  EXPECT_DOUBLE_EQ(p(0.125), 0.5);
  EXPECT_EQ(p(0.6), 1.0);
}

TEST(EvalLift, Examples) {
  EXPECT_EQ(MapExpr::v()(Vec2{0, 0}), (Vec2{0, 0}));
  EXPECT_EQ(MapExpr::v()(Vec2{0.5, 0}), (Vec2{0.5, 1}));
  const MapExpr e = MapExpr::compose({MapExpr::h(3), MapExpr::v(2)});
  EXPECT_EQ(e(Vec2{0, 0.5}), (Vec2{3, 0.5}));
  EXPECT_EQ(parse_map_expr("H^3 V^2")(Vec2{0, 0.5}), (Vec2{3, 0.5}));
}

TEST(EvalLift, CompositionIsRightToLeft) {
  // v o h at (0, 1/2): h moves to (1, 1/2), then v adds phi(1) = 0.
  const MapExpr vh = MapExpr::compose({MapExpr::v(), MapExpr::h()});
  EXPECT_EQ(vh(Vec2{0, 0.5}), (Vec2{1, 0.5}));
  // h o v at (1/2, 0): v adds phi(1/2) = 1, then h adds phi(1) = 0.
  const MapExpr hv = MapExpr::compose({MapExpr::h(), MapExpr::v()});
  EXPECT_EQ(hv(Vec2{0.5, 0}), (Vec2{0.5, 1}));
}

// x + m is exact for these, so only the evaluation itself is compared.
Vec2 dyadic_point(Gen& g) {
  return {static_cast<double>(g.range(0, (1 << 30) - 1)) * 0x1.0p-30,
          static_cast<double>(g.range(0, (1 << 30) - 1)) * 0x1.0p-30};
}

TEST(EvalLift, CommutesWithIntegerTranslations) {
  Gen g(21);
  const MapExpr exprs[] = {parse_map_expr("V^3 H^3"), parse_map_expr("(V H)^4"),
                           parse_map_expr("T(1/3, -0.25) V^2 H"), parse_map_expr("H^-2 V")};
  for (const MapExpr& e : exprs) {
    for (int i = 0; i < 2000; ++i) {
      const Vec2 x = dyadic_point(g);
      const Vec2 m{static_cast<double>(g.range(-5, 5)), static_cast<double>(g.range(-5, 5))};
      const Vec2 a = e(x + m), b = e(x) + m;
      ASSERT_LE(ulps_apart(a.x, b.x), 4.0) << e.str();
      ASSERT_LE(ulps_apart(a.y, b.y), 4.0) << e.str();
    }
  }
}

TEST(Displacement, FixedPointsOfVnHn) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const MapExpr f = MapExpr::vn_hn(n);
    const double nd = static_cast<double>(n);
    EXPECT_EQ(f(Vec2{0, 0}), (Vec2{0, 0}));
    EXPECT_EQ(f(Vec2{0, 0.5}) - Vec2({0, 0.5}), (Vec2{nd, 0}));
    EXPECT_EQ(f(Vec2{0.5, 0}) - Vec2({0.5, 0}), (Vec2{0, nd}));
    EXPECT_EQ(f(Vec2{0.5, 0.5}) - Vec2({0.5, 0.5}), (Vec2{nd, nd}));
    EXPECT_EQ(displacement(f, {0.5, 0.5}, 1).mean_displacement, (Vec2{nd, nd}));
    EXPECT_EQ(displacement(f, {0, 0}, 37).mean_displacement, (Vec2{0, 0}));
  }
}

TEST(Displacement, IdentityAndTranslation) {
  Gen g(22);
  const MapExpr t = MapExpr::translate(Rational(1, 4), Rational(-1, 2));
  for (int i = 0; i < 50; ++i) {
    const Vec2 x = g.unit_square_point();
    EXPECT_EQ(displacement(MapExpr::identity(), x, 100).mean_displacement, (Vec2{0, 0}));
    const Vec2 d = rotation_vector_estimate(t, x, 1 + i).vector;
    EXPECT_DOUBLE_EQ(d.x, 0.25);
    EXPECT_DOUBLE_EQ(d.y, -0.5);
  }
}

TEST(Displacement, IndependentOfLift) {
  Gen g(23);
  const MapExpr e = parse_map_expr("V^2 H^2");
  for (int i = 0; i < 200; ++i) {
    const Vec2 x = dyadic_point(g);
    const Vec2 m{static_cast<double>(g.range(-5, 5)), static_cast<double>(g.range(-5, 5))};
    const Vec2 a = displacement(e, x, 50).mean_displacement;
    const Vec2 b = displacement(e, x + m, 50).mean_displacement;
    ASSERT_LE(ulps_apart(a.x, b.x), 8.0);
    ASSERT_LE(ulps_apart(a.y, b.y), 8.0);
  }
}

TEST(RotationVector, FixedPointOfVnHn) {
  const auto r = rotation_vector_estimate(MapExpr::vn_hn(3), {0, 0.5}, 1000);
  EXPECT_EQ(r.vector, (Vec2{3, 0}));
  EXPECT_EQ(r.tail_spread, 0.0);
}

TEST(RotationVector, VHStaysInUnitSquare) {
  Gen g(24);
  const MapExpr vh = MapExpr::vn_hn(1);
  for (int i = 0; i < 20; ++i) {
    const Vec2 x = g.unit_square_point();
    for (std::int64_t n : {1000, 10000}) {
      const Vec2 v = rotation_vector_estimate(vh, x, n).vector;
      EXPECT_GE(v.x, -1e-12);
      EXPECT_LE(v.x, 1 + 1e-12);
      EXPECT_GE(v.y, -1e-12);
      EXPECT_LE(v.y, 1 + 1e-12);
    }
  }
}

TEST(RotationSet, TranslationIsAPoint) {
  RotationSetOptions o;
  o.grid = 8;
  o.iterates = 50;
  o.threads = 2;
  const auto est = rotation_set_estimate(MapExpr::translate(Rational(1, 3), Rational(1, 4)), o);
  const Vec2 target{1.0 / 3.0, 0.25};
  for (const Vec2& v : to_vec2(est.inner_hull)) EXPECT_LT(norm(v - target), 1e-12);
  EXPECT_LT(distance_to_convex(target, to_vec2(est.outer_hull)), 1e-15);
}

TEST(RotationSet, RejectsBadParameters) {
  RotationSetOptions o;
  o.grid = 1;
  EXPECT_THROW(rotation_set_estimate(MapExpr::v(), o), std::invalid_argument);
  o.grid = 4;
  o.iterates = 0;
  EXPECT_THROW(rotation_set_estimate(MapExpr::v(), o), std::invalid_argument);
}

TEST(RotationSet, InnerHullInsideOuterHull) {
  for (const char* text : {"V H", "V^2 H^2", "(V H)^2", "T(0.1, 0.2) V"}) {
    for (auto scheme : {SamplingScheme::kUniformGrid, SamplingScheme::kQuasiRandom}) {
      RotationSetOptions o;
      o.grid = 24;
      o.iterates = 300;
      o.scheme = scheme;
      o.seed = 5;
      const auto est = rotation_set_estimate(parse_map_expr(text), o);
      const auto outer = to_vec2(est.outer_hull);
      for (const Vec2& v : to_vec2(est.inner_hull)) {
        EXPECT_LT(distance_to_convex(v, outer), 1e-12) << text;
      }
    }
  }
}

TEST(RotationSet, IndependentOfThreadCount) {
  RotationSetOptions o;
  o.grid = 20;
  o.iterates = 200;
  o.threads = 1;
  const auto one = rotation_set_estimate(MapExpr::vn_hn(2), o);
  o.threads = 3;
  const auto three = rotation_set_estimate(MapExpr::vn_hn(2), o);
  EXPECT_EQ(one.inner_hull, three.inner_hull);
  EXPECT_EQ(one.outer_hull, three.outer_hull);
}

TEST(RotationSet, VnHnStabilisesTowardBox) {
  const std::int64_t n = 2;
  double prev = INFINITY;
  for (std::int64_t iters : {250, 500, 1000, 2000}) {
    RotationSetOptions o;
    o.grid = 32;
    o.iterates = iters;
    const auto est = rotation_set_estimate(MapExpr::vn_hn(n), o);
    const double d = hausdorff_distance(est.inner_hull, box(0, n));
    EXPECT_LE(d, prev + 0.01 * n);
    EXPECT_LE(d, 0.05 * n);
    prev = d;
  }
}

TEST(DisplacementBox, HoldsForVnHn) {
  for (std::int64_t n : {1, 2, 4}) {
    const auto r = verify_displacement_box(MapExpr::vn_hn(n), static_cast<double>(n), 100000);
    EXPECT_TRUE(r.ok) << n;
    EXPECT_EQ(r.worst_excess, 0.0);
    EXPECT_EQ(r.samples, 100000);
  }
}

TEST(DisplacementBox, TranslationBreaksIt) {
  const double eps = 1e-3;
  const MapExpr e = MapExpr::compose({MapExpr::vn_hn(2), MapExpr::translate(Rational(1, 1000), 0)});
  const auto r = verify_displacement_box(e, 2.0, 100000);
  EXPECT_FALSE(r.ok);
  EXPECT_NEAR(r.worst_excess, eps, 1e-4);
}

TEST(PowerScaling, TranslationScalesExactly) {
  RotationSetOptions o;
  o.grid = 6;
  o.iterates = 40;
  const auto rep = power_scaling_check(MapExpr::translate(Rational(1, 5), Rational(2, 7)), 3, o);
  EXPECT_LT(rep.distance, 1e-12);
}

TEST(PowerScaling, VnHnSquaredFillsDoubledBox) {
  RotationSetOptions o;
  o.grid = 32;
  o.iterates = 300;
  const auto rep = power_scaling_check(MapExpr::vn_hn(2), 2, o);
  EXPECT_LE(hausdorff_distance(rep.power.inner_hull, box(0, 4)), 0.2);
  EXPECT_LE(rep.distance, 0.2);
}

TEST(Sampling, QuasiRandomIsDeterministicPerSeed) {
  EXPECT_EQ(sample_points(8, SamplingScheme::kQuasiRandom, 3), sample_points(8, SamplingScheme::kQuasiRandom, 3));
  EXPECT_NE(sample_points(8, SamplingScheme::kQuasiRandom, 3), sample_points(8, SamplingScheme::kQuasiRandom, 4));
  for (const Vec2& p : sample_points(16, SamplingScheme::kQuasiRandom, 9)) {
    EXPECT_GE(p.x, 0.0);
    EXPECT_LT(p.x, 1.0);
    EXPECT_GE(p.y, 0.0);
    EXPECT_LT(p.y, 1.0);
  }
}

TEST(Parser, RendersAndReparses) {
  for (const char* text : {"V^3 H^3", "(V H)^2", "T(1/3,1/4)", "V H^-1 (H V)^3"}) {
    const MapExpr e = parse_map_expr(text);
    EXPECT_EQ(parse_map_expr(e.str()).str(), e.str()) << text;
  }
}

TEST(Parser, ErrorPositions) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"V^^2", 2}, {"V H)", 3}, {"T(1,", 4}, {"", 0}, {"V X", 2}, {"(V H", 4}};
  for (const auto& [text, pos] : cases) {
    try {
      parse_map_expr(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const MapParseError& e) {
      EXPECT_EQ(e.position(), pos) << "'" << text << "': " << e.what();
    }
  }
}

TEST(Parser, CaretDiagnostic) {
  try {
    parse_map_expr("V^^2");
  } catch (const MapParseError& e) {
    EXPECT_EQ(caret_diagnostic("V^^2", e).substr(caret_diagnostic("V^^2", e).find('\n') + 1), "  ^\n");
  }
}

TEST(Parser, ProfileSuffix) {
  const auto path = temp_file("tent.pl", "0 0\n1/2 1\n1 0\n");
  const MapExpr e = parse_map_expr("V H @pl:" + path);
  EXPECT_DOUBLE_EQ(e(Vec2{0, 0.25}).x, 0.5);
  EXPECT_THROW(parse_map_expr("V @pl:" + ::testing::TempDir() + "missing.pl"), std::exception);
}

}  // namespace
}  // namespace rotwidth::torus
