#include "rotwidth/lattice/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rotwidth/lattice/polygon_io.hpp"
#include "rotwidth/lattice/random_polygon.hpp"
#include "support/generators.hpp"

namespace rotwidth::lattice {
namespace {

using testing::Gen;

ConvexPolygonQ hull(std::vector<Point2Q> pts) { return convex_hull(pts); }

ConvexPolygonQ square(const Rational& lo, const Rational& hi) {
  return hull({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}});
}

ConvexPolygonQ wide_triangle() {
  return hull({{-1, 0}, {Rational(2, 3), Rational(5, 3)}, {Rational(7, 3), Rational(-5, 3)}});
}

// Independent of the library: width along w over the raw point list.
Rational raw_width(const std::vector<Point2Q>& pts, std::int64_t a, std::int64_t b) {
  Rational lo = a * pts[0].x + b * pts[0].y, hi = lo;
  for (const auto& p : pts) {
    const Rational v = a * p.x + b * p.y;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

// Euclidean width from every pair of input points taken as a candidate edge.
// Non-edges only overestimate, so the minimum is the true width.
double raw_geometric_width(const std::vector<Point2Q>& pts) {
  double best = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double ex = (pts[j].x - pts[i].x).to_double(), ey = (pts[j].y - pts[i].y).to_double();
      const double len = std::hypot(ex, ey);
      if (len == 0.0) continue;
      double lo = 0.0, hi = 0.0;
      for (const auto& p : pts) {
        const double d = (ex * (p.y - pts[i].y).to_double() - ey * (p.x - pts[i].x).to_double()) / len;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      best = std::min(best, hi - lo);
    }
  }
  return best;
}

// Brute force over primitive directions, radius from the raw widths.
Rational brute_force_ew(const std::vector<Point2Q>& pts) {
  const Rational w0 = raw_width(pts, 1, 0);
  const double g = raw_geometric_width(pts);
  const auto radius = static_cast<std::int64_t>(std::floor(w0.to_double() / (g * (1 - 1e-9)))) + 1;
  Rational best = w0;
  for (std::int64_t a = 0; a <= radius; ++a) {
    for (std::int64_t b = -radius; b <= radius; ++b) {
      if (std::gcd(a, b) != 1 || a * a + b * b > radius * radius) continue;
      best = std::min(best, raw_width(pts, a, b));
    }
  }
  return best;
}

std::vector<Point2Q> random_points(Gen& g, int n) {
  std::vector<Point2Q> pts;
  for (int i = 0; i < n; ++i) pts.push_back(g.point(10, 8));
  return pts;
}

bool inside_closed(const ConvexPolygonQ& c, const Point2Q& p) {
  const auto& v = c.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orient(v[i], v[(i + 1) % v.size()], p).sign() < 0) return false;
  }
  return true;
}

TEST(ConvexHull, SinglePointIsDimensionZero) {
  const auto c = hull({{0, 0}});
  EXPECT_EQ(c.dimension(), 0);
  EXPECT_EQ(c.size(), 1u);
}

TEST(ConvexHull, CollinearPointsGiveSegment) {
  const auto c = hull({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(c.dimension(), 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.vertices()[0], (Point2Q{0, 0}));
  EXPECT_EQ(c.vertices()[1], (Point2Q{2, 0}));
}

TEST(ConvexHull, DropsInteriorPoint) {
  const std::vector<Point2Q> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), Rational(1, 2)}};
  const auto c = convex_hull(pts);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c, square(0, 1));
  for (const auto& p : pts) EXPECT_TRUE(inside_closed(c, p));
}

TEST(ConvexHull, EmptyInputThrows) {
  EXPECT_THROW(convex_hull(std::vector<Point2Q>{}), std::invalid_argument);
}

TEST(ConvexHull, RandomHullsContainInputsAndAreStrictlyConvex) {
  Gen g(11);
  for (int iter = 0; iter < 500; ++iter) {
    const auto pts = random_points(g, static_cast<int>(g.range(3, 12)));
    const auto c = convex_hull(pts);
    for (const auto& p : pts) ASSERT_TRUE(inside_closed(c, p));
    const auto& v = c.vertices();
    if (c.dimension() < 2) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      ASSERT_GT(orient(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]).sign(), 0);
      ASSERT_TRUE(std::find(pts.begin(), pts.end(), v[i]) != pts.end());
    }
  }
}

TEST(DirectionalWidth, UnitSquare) {
  const auto c = square(0, 1);
  EXPECT_EQ(directional_width(c, {1, 0}), Rational(1));
  EXPECT_EQ(directional_width(c, {1, 1}), Rational(2));
  EXPECT_EQ(directional_width(c, {1, 1}), raw_width(c.vertices(), 1, 1));
}

TEST(DirectionalWidth, PointHasZeroWidth) {
  EXPECT_EQ(directional_width(hull({{3, Rational(1, 7)}}), {5, -3}), Rational(0));
}

TEST(PrimitiveVector, RejectsNonCoprime) {
  EXPECT_THROW(PrimitiveVector(2, 4), std::invalid_argument);
  EXPECT_THROW(PrimitiveVector(0, 0), std::invalid_argument);
  EXPECT_NO_THROW(PrimitiveVector(0, -1));
}

TEST(UnimodularMatrix, RejectsDeterminantOtherThanOne) {
  EXPECT_THROW(UnimodularMatrix(2, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(UnimodularMatrix(0, 1, 1, 0), std::invalid_argument);
}

TEST(UnimodularMatrix, WithFirstRow) {
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const auto w = g.primitive(1000);
    const auto m = UnimodularMatrix::with_first_row(w);
    EXPECT_EQ(m.first_row(), w);
  }
}

TEST(ApplyUnimodular, IdentityAndShear) {
  const auto c = square(0, 1);
  EXPECT_EQ(apply_unimodular(UnimodularMatrix::identity(), c), c);
  EXPECT_EQ(apply_unimodular({1, 1, 0, 1}, c), hull({{0, 0}, {1, 0}, {2, 1}, {1, 1}}));
  EXPECT_EQ(apply_unimodular({2, 1, 1, 1}, hull({{1, 2}})), hull({{4, 3}}));
}

TEST(ApplyUnimodular, PreservesVertexCount) {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_polygon(g.engine());
    EXPECT_EQ(apply_unimodular(g.unimodular(12), c).size(), c.size());
  }
}

TEST(EssentialWidth, WideTriangle) {
  const auto ew = essential_width_with_direction(wide_triangle());
  EXPECT_EQ(ew.width, Rational(10, 3));
  EXPECT_EQ(directional_width(wide_triangle(), ew.direction), Rational(10, 3));
}

TEST(EssentialWidth, Squares) {
  EXPECT_EQ(essential_width(square(0, 1)), Rational(1));
  EXPECT_EQ(essential_width(square(0, 3)), Rational(3));
  EXPECT_EQ(essential_width(square(0, 1)), brute_force_ew(square(0, 1).vertices()));
  EXPECT_EQ(essential_width(square(0, 3)), brute_force_ew(square(0, 3).vertices()));
}

TEST(EssentialWidth, UnitSquareWidthIsL1NormOfDirection) {
  const auto c = square(0, 1);
  for (std::int64_t a = -10; a <= 10; ++a) {
    for (std::int64_t b = -10; b <= 10; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(directional_width(c, {a, b}), Rational(std::abs(a) + std::abs(b)));
    }
  }
}

TEST(EssentialWidth, DegeneratePolygonsHaveZeroWidth) {
  EXPECT_EQ(essential_width(hull({{0, 0}, {3, 6}})), Rational(0));
  EXPECT_EQ(essential_width(hull({{Rational(1, 3), 2}})), Rational(0));
  EXPECT_EQ(essential_width(hull({{0, Rational(1, 2)}, {Rational(5, 7), 1}})), Rational(0));
}

TEST(EssentialWidth, OracleAgreesOnWideTriangleAndSquares) {
  EXPECT_EQ(ew_oracle(wide_triangle(), 5), Rational(10, 3));
  EXPECT_EQ(ew_oracle(square(0, 1), 1), Rational(1));
  EXPECT_EQ(ew_oracle(square(0, 3), 2), Rational(3));
}

TEST(EssentialWidth, MatchesIndependentBruteForce) {
  Gen g(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto c = random_polygon(g.engine());
    ASSERT_EQ(essential_width(c), brute_force_ew(c.vertices())) << format_polygon(c);
    ASSERT_EQ(essential_width(c), ew_oracle(c, enumeration_radius(c)));
  }
}

TEST(EssentialWidth, InvariantUnderUnimodularMapsAndTranslations) {
  Gen g(77);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto c = random_polygon(g.engine());
    auto m = g.unimodular(static_cast<int>(g.range(0, 10)));
    while (std::max({std::abs(m.a()), std::abs(m.b()), std::abs(m.c()), std::abs(m.d())}) > 20) {
      m = g.unimodular(static_cast<int>(g.range(0, 10)));
    }
    const Point2Q z{g.range(-20, 20), g.range(-20, 20)};
    ASSERT_EQ(essential_width(apply_unimodular(m, c).translated(z)), essential_width(c));
  }
}

TEST(EssentialWidth, Homogeneous) {
  Gen g(78);
  for (int iter = 0; iter < 500; ++iter) {
    const auto c = random_polygon(g.engine());
    const Rational r = g.positive_rational(20, 9);
    ASSERT_EQ(essential_width(c.scaled(r)), r * essential_width(c));
  }
}

TEST(EssentialWidth, MonotoneUnderInclusion) {
  Gen g(79);
  for (int iter = 0; iter < 500; ++iter) {
    auto pts = random_points(g, 4);
    const auto small = convex_hull(pts);
    for (int k = 0; k < 3; ++k) pts.push_back(g.point(12, 8));
    const auto big = convex_hull(pts);
    ASSERT_LE(essential_width(small), essential_width(big));
  }
}

TEST(EssentialWidth, NoEnumeratedBasisChangeBeatsIt) {
  Gen g(80);
  std::vector<UnimodularMatrix> mats;
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      if (std::gcd(a, b) == 1) mats.push_back(UnimodularMatrix::with_first_row({a, b}));
    }
  }
  for (int iter = 0; iter < 100; ++iter) {
    const auto c = random_polygon(g.engine());
    const auto ew = essential_width_with_direction(c);
    Rational best = directional_width(apply_unimodular(mats[0], c), {1, 0});
    for (const auto& m : mats) {
      const Rational h = directional_width(apply_unimodular(m, c), {1, 0});
      ASSERT_GE(h, ew.width);
      best = std::min(best, h);
    }
    if (std::max(std::abs(ew.direction.a()), std::abs(ew.direction.b())) <= 6) {
      EXPECT_EQ(best, ew.width);
    }
  }
}

TEST(MinGeometricWidth, Examples) {
  EXPECT_DOUBLE_EQ(min_geometric_width(square(0, 1)), 1.0);
  EXPECT_NEAR(min_geometric_width(hull({{0, 0}, {4, 0}, {0, 4}})), 4.0 / std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(min_geometric_width(square(0, 3)), 3.0);
  EXPECT_THROW(min_geometric_width(hull({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST(MinGeometricWidth, NeverAboveRawWidth) {
  Gen g(81);
  for (int iter = 0; iter < 500; ++iter) {
    const auto c = random_polygon(g.engine());
    ASSERT_LE(min_geometric_width(c), raw_geometric_width(c.vertices()) * (1 + 1e-12));
  }
}

TEST(InteriorLatticePoints, Examples) {
  EXPECT_EQ(interior_lattice_points(wide_triangle()), (std::vector<IntPoint>{{0, 0}, {1, 0}}));
  EXPECT_TRUE(interior_lattice_points(square(0, 1)).empty());
  const auto pts = interior_lattice_points(square(-1, 1).scaled(Rational(3, 2)));
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (IntPoint{-1, -1}));
  EXPECT_EQ(pts.back(), (IntPoint{1, 1}));
  EXPECT_TRUE(interior_lattice_points(hull({{-5, 0}, {5, 0}})).empty());
}

TEST(InteriorLatticePoints, MatchesBoundingBoxScan) {
  Gen g(82);
  for (int iter = 0; iter < 300; ++iter) {
    const auto c = random_polygon(g.engine());
    std::vector<IntPoint> expect;
    const auto& v = c.vertices();
    for (std::int64_t x = -11; x <= 11; ++x) {
      for (std::int64_t y = -11; y <= 11; ++y) {
        bool strict = true;
        for (std::size_t i = 0; i < v.size() && strict; ++i) {
          strict = orient(v[i], v[(i + 1) % v.size()], {x, y}).sign() > 0;
        }
        if (strict) expect.push_back({x, y});
      }
    }
    ASSERT_EQ(interior_lattice_points(c), expect);
  }
}

TEST(ThreeNonaligned, Examples) {
  EXPECT_FALSE(has_three_nonaligned_interior(wide_triangle()));
  EXPECT_TRUE(has_three_nonaligned_interior(square(-1, 1).scaled(Rational(3, 2))));
  EXPECT_FALSE(has_three_nonaligned_interior(hull({{-9, -9}, {9, 9}})));
}

TEST(CompareWidth, Examples) {
  const auto t = check_compare_width(wide_triangle());
  EXPECT_EQ(t.ew, Rational(10, 3));
  EXPECT_FALSE(t.has3);
  EXPECT_TRUE(t.ok());
  const auto s5 = check_compare_width(square(0, 5));
  EXPECT_EQ(s5.ew, Rational(5));
  EXPECT_TRUE(s5.has3);
  EXPECT_TRUE(s5.ok());
  const auto s1 = check_compare_width(square(0, 1));
  EXPECT_EQ(s1.ew, Rational(1));
  EXPECT_FALSE(s1.has3);
  EXPECT_TRUE(s1.ok());
}

TEST(CompareWidth, HoldsOnRandomPolygons) {
  Gen g(83);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto c = random_polygon(g.engine());
    ASSERT_TRUE(check_compare_width(c).ok()) << format_polygon(c);
  }
}

TEST(CompareWidth, ThreeClosedPointsForceWidthOne) {
  Gen g(84);
  for (int iter = 0; iter < 500; ++iter) {
    const auto c = random_polygon(g.engine());
    if (has_three_nonaligned(lattice_points(c))) ASSERT_GE(essential_width(c), Rational(1));
  }
}

TEST(PolygonIo, RoundTrip) {
  Gen g(85);
  for (int iter = 0; iter < 100; ++iter) {
    const auto c = random_polygon(g.engine());
    EXPECT_EQ(parse_polygon(format_polygon(c)), c);
  }
}

TEST(PolygonIo, ReportsLineOfBadInput) {
  try {
    parse_polygon("# header\n0 0\n1 x\n");
    FAIL();
  } catch (const PolygonParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_EQ(parse_polygon("0.5 1/2\n-1e0 0\n0 3\n").size(), 3u);
}

}  // namespace
}  // namespace rotwidth::lattice
