#include "rotwidth/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rotwidth {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

std::vector<std::size_t> hull_indices(std::span<const Vec2> pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return pts[i].x != pts[j].x ? pts[i].x < pts[j].x : pts[i].y < pts[j].y;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t i, std::size_t j) {
                          return pts[i] == pts[j];
                        }),
            idx.end());
  if (idx.size() <= 2) return idx;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    return cross(pts[a] - pts[o], pts[b] - pts[o]);
  };
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    while (k >= lower && turn(h[k - 2], h[k - 1], idx[t]) <= 0) --k;
    h[k++] = idx[t];
  }
  h.resize(k - 1);
  return h;
}

std::vector<Vec2> to_vec2(const lattice::ConvexPolygonQ& c) {
  std::vector<Vec2> out;
  out.reserve(c.size());
  for (const auto& p : c.vertices()) out.push_back({p.x.to_double(), p.y.to_double()});
  return out;
}

lattice::ConvexPolygonQ exact_hull(std::span<const Vec2> pts) {
  std::vector<lattice::Point2Q> q;
  q.reserve(pts.size());
  for (Vec2 p : pts) q.push_back({Rational::from_double(p.x), Rational::from_double(p.y)});
  return lattice::convex_hull(q);
}

namespace {

double point_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a, ap = p - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0 ? (ap.x * ab.x + ap.y * ab.y) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

}  // namespace

double distance_to_convex(Vec2 p, std::span<const Vec2> poly) {
  if (poly.empty()) return INFINITY;
  if (poly.size() == 1) return norm(p - poly[0]);
  if (poly.size() == 2) return point_segment(p, poly[0], poly[1]);
  bool inside = true;
  double best = INFINITY;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
    if (cross(b - a, p - a) < 0) inside = false;
    best = std::min(best, point_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

double hausdorff_distance(const lattice::ConvexPolygonQ& a,
                          const lattice::ConvexPolygonQ& b) {
  const auto va = to_vec2(a), vb = to_vec2(b);
  double d = 0.0;
  for (Vec2 p : va) d = std::max(d, distance_to_convex(p, vb));
  for (Vec2 p : vb) d = std::max(d, distance_to_convex(p, va));
  return d;
}

lattice::ConvexPolygonQ box(const Rational& lo, const Rational& hi) {
  const std::vector<lattice::Point2Q> c = {{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}};
  return lattice::convex_hull(c);
}

}  // namespace rotwidth
