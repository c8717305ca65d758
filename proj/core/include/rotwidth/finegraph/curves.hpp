#pragma once

// Essential simple closed curves on the torus R^2 / Z^2 and their
// intersections.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotwidth/lattice/geometry.hpp"
#include "rotwidth/planar.hpp"

namespace rotwidth::finegraph {

using lattice::Point2Q;

/// Homotopy class (p, q) of an essential simple closed curve.
class CurveClass {
 public:
  CurveClass(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// |p1 q2 - q1 p2|, the minimal number of intersections in the two classes.
std::int64_t intersection_number(const CurveClass& a, const CurveClass& b);

/// Raised when two curves touch without crossing transversally, or overlap.
class TangentialContact : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSimpleCurve : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed polyline on the torus, stored as a lift: vertices v0 .. v{k-1}
/// in the plane, with the closing segment running from v{k-1} to
/// v0 + (p, q). Vertices are exact rationals.
class RealizedCurve {
 public:
  /// Straight geodesic of the given class through `through`.
  static RealizedCurve straight(const CurveClass& cls, const Point2Q& through);

  /// Validates simplicity; throws NonSimpleCurve.
  static RealizedCurve from_lift(std::vector<Point2Q> lift, const CurveClass& cls,
                                 std::string provenance);

  /// Exact conversion of double samples of a lifted closed path. The class
  /// is (end - start) rounded; the last sample must not repeat the first.
  static RealizedCurve from_samples(std::span<const Vec2> samples, Vec2 closing_shift,
                                    std::string provenance);

  const std::vector<Point2Q>& lift() const { return lift_; }
  const CurveClass& curve_class() const { return cls_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t segment_count() const { return lift_.size(); }

  /// Start and end of segment i in lift coordinates.
  Point2Q seg_start(std::size_t i) const { return lift_[i]; }
  Point2Q seg_end(std::size_t i) const;

 private:
  RealizedCurve(std::vector<Point2Q> lift, CurveClass cls, std::string prov)
      : lift_(std::move(lift)), cls_(cls), provenance_(std::move(prov)) {}

  std::vector<Point2Q> lift_;
  CurveClass cls_;
  std::string provenance_;
};

/// Number of transverse crossings on the torus. Throws TangentialContact
/// when some contact is not a transverse crossing.
std::int64_t crossing_count(const RealizedCurve& a, const RealizedCurve& b);

/// Torus adjacency: disjoint, or exactly one (transverse) intersection.
bool fine_adjacent(const RealizedCurve& a, const RealizedCurve& b);

/// True when the curve has no self-contacts besides consecutive segments
/// meeting at their shared vertex.
bool is_simple(const RealizedCurve& c);

}  // namespace rotwidth::finegraph
