#pragma once

// Double-precision planar helpers shared by the numerical modules.

#include <span>
#include <vector>

#include "rotwidth/lattice/geometry.hpp"

namespace rotwidth {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

double norm(Vec2 v);
double cross(Vec2 a, Vec2 b);

/// Indices of the convex hull vertices (CCW, collinear points dropped).
std::vector<std::size_t> hull_indices(std::span<const Vec2> pts);

std::vector<Vec2> to_vec2(const lattice::ConvexPolygonQ& c);

/// Exact polygon from double points; every double is an exact rational.
lattice::ConvexPolygonQ exact_hull(std::span<const Vec2> pts);

/// Euclidean distance from p to a convex polygon given by CCW vertices
/// (zero when p lies inside).
double distance_to_convex(Vec2 p, std::span<const Vec2> poly);

/// Hausdorff distance between two convex polygons; attained at vertices.
double hausdorff_distance(const lattice::ConvexPolygonQ& a,
                          const lattice::ConvexPolygonQ& b);

/// Axis-aligned square [lo, hi]^2 as an exact polygon.
lattice::ConvexPolygonQ box(const Rational& lo, const Rational& hi);

}  // namespace rotwidth
