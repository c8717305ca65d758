#pragma once

// Exact convex geometry over the rationals: hulls, directional widths,
// unimodular changes of basis, lattice width (essential width) and
// integer-point predicates.

#include <cstdint>
#include <span>
#include <vector>

#include "rotwidth/rational.hpp"

namespace rotwidth::lattice {

struct Point2Q {
  Rational x;
  Rational y;

  friend bool operator==(const Point2Q&, const Point2Q&) = default;
};

/// Lexicographic (x, then y).
bool lex_less(const Point2Q& a, const Point2Q& b);

/// Twice the signed area of the triangle (o, a, b); > 0 when counter-clockwise.
Rational orient(const Point2Q& o, const Point2Q& a, const Point2Q& b);

struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntPoint&, const IntPoint&) = default;
  friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

/// Integer vector with coprime coordinates, never (0, 0).
class PrimitiveVector {
 public:
  PrimitiveVector(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  friend bool operator==(const PrimitiveVector&,
                         const PrimitiveVector&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Integer 2x2 matrix (a b; c d) with determinant exactly 1.
class UnimodularMatrix {
 public:
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  /// Some matrix whose first row is w (extended Euclid on the coordinates).
  static UnimodularMatrix with_first_row(const PrimitiveVector& w);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  PrimitiveVector first_row() const { return {a_, b_}; }
  UnimodularMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  Point2Q apply(const Point2Q& p) const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& l,
                                    const UnimodularMatrix& r);
  friend bool operator==(const UnimodularMatrix&,
                         const UnimodularMatrix&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Convex polygon with exact rational vertices.
///
/// Vertices are the extreme points of the hull, listed counter-clockwise
/// starting from the lexicographically smallest one. Points and segments
/// are valid polygons of dimension 0 and 1.
class ConvexPolygonQ {
 public:
  /// The point polygon {(0, 0)}.
  ConvexPolygonQ() : vertices_{Point2Q{}} {}

  const std::vector<Point2Q>& vertices() const { return vertices_; }
  int dimension() const;
  std::size_t size() const { return vertices_.size(); }

  ConvexPolygonQ translated(const Point2Q& offset) const;
  ConvexPolygonQ scaled(const Rational& r) const;  // homothety about 0, r > 0

  friend bool operator==(const ConvexPolygonQ&,
                         const ConvexPolygonQ&) = default;

 private:
  friend ConvexPolygonQ convex_hull(std::span<const Point2Q> points);
  explicit ConvexPolygonQ(std::vector<Point2Q> v) : vertices_(std::move(v)) {}

  std::vector<Point2Q> vertices_;
};

/// Exact convex hull (monotone chain). Throws std::invalid_argument on
/// empty input.
ConvexPolygonQ convex_hull(std::span<const Point2Q> points);

/// max <w, x> - min <w, x> over the polygon.
Rational directional_width(const ConvexPolygonQ& c, const PrimitiveVector& w);

ConvexPolygonQ apply_unimodular(const UnimodularMatrix& m,
                                const ConvexPolygonQ& c);

/// Minimal Euclidean width over all directions (rotating calipers).
///
/// The returned double never exceeds the true width, so it is safe to use
/// as a divisor when bounding a direction search. Throws
/// std::invalid_argument for polygons of dimension < 2.
double min_geometric_width(const ConvexPolygonQ& c);

struct EssentialWidth {
  Rational width;
  PrimitiveVector direction{1, 0};  // a minimiser; first row of some A
};

/// Lattice width: min over primitive w of directional_width(c, w). This is
/// the infimum over SL2(Z) of the horizontal width of A.c and is attained
/// for rational polygons. Zero for points and segments.
EssentialWidth essential_width_with_direction(const ConvexPolygonQ& c);
Rational essential_width(const ConvexPolygonQ& c);

/// Radius R such that every primitive w with ||w|| > R is wider than the
/// best seed direction of c. Computed directly from c (no basis reduction).
std::int64_t enumeration_radius(const ConvexPolygonQ& c);

/// Brute force: minimum width over all primitive w with max(|a|,|b|) <=
/// radius. An upper bound on the essential width, equal to it once radius
/// reaches enumeration_radius(c).
Rational ew_oracle(const ConvexPolygonQ& c, std::int64_t radius);

/// Integer points strictly inside c, sorted. Empty for dimension <= 1.
std::vector<IntPoint> interior_lattice_points(const ConvexPolygonQ& c);

/// Integer points of the closed polygon (boundary included), sorted.
std::vector<IntPoint> lattice_points(const ConvexPolygonQ& c);

/// True when some three of the points are affinely independent.
bool has_three_nonaligned(std::span<const IntPoint> pts);
bool has_three_nonaligned_interior(const ConvexPolygonQ& c);

struct CompareWidthVerdict {
  Rational ew;
  bool has3 = false;
  bool implication1_ok = false;  // has3 => ew > 1
  bool implication2_ok = false;  // ew > 4 => has3
  bool ok() const { return implication1_ok && implication2_ok; }
};

CompareWidthVerdict check_compare_width(const ConvexPolygonQ& c);

}  // namespace rotwidth::lattice
