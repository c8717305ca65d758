#include "rotwidth/finegraph/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace rotwidth::finegraph {

CurveClass::CurveClass(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1) {
    std::ostringstream os;
    os << "curve class (" << p << ", " << q << ") is not primitive";
    throw std::invalid_argument(os.str());
  }
}

std::int64_t intersection_number(const CurveClass& a, const CurveClass& b) {
  const std::int64_t d = a.p() * b.q() - a.q() * b.p();
  return d < 0 ? -d : d;
}

namespace {

Point2Q operator+(const Point2Q& a, const Point2Q& b) { return {a.x + b.x, a.y + b.y}; }
Point2Q operator-(const Point2Q& a, const Point2Q& b) { return {a.x - b.x, a.y - b.y}; }
Rational cross(const Point2Q& a, const Point2Q& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point2Q& a, const Point2Q& b) { return a.x * b.x + a.y * b.y; }

Point2Q shift_of(const CurveClass& c) { return {Rational(c.p()), Rational(c.q())}; }

struct Box {
  double x0, x1, y0, y1;
};

Box bounds(const Point2Q& a, const Point2Q& b) {
  const double ax = a.x.to_double(), ay = a.y.to_double();
  const double bx = b.x.to_double(), by = b.y.to_double();
  // to_double is within one rounding of the exact value; pad generously.
  const auto pad = [](double lo, double hi) {
    const double m = 1e-9 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
    return std::pair{lo - m, hi + m};
  };
  auto [x0, x1] = pad(std::min(ax, bx), std::max(ax, bx));
  auto [y0, y1] = pad(std::min(ay, by), std::max(ay, by));
  return {x0, x1, y0, y1};
}

enum class Hit { kNone, kPoint, kOverlap };

struct Intersection {
  Hit hit = Hit::kNone;
  Rational t;  // parameter on the first segment
  Rational s;  // parameter on the second segment
};

Intersection intersect(const Point2Q& a0, const Point2Q& a1, const Point2Q& b0,
                       const Point2Q& b1) {
  const Point2Q da = a1 - a0, db = b1 - b0, w = b0 - a0;
  const Rational d = cross(da, db);
  if (d.sign() != 0) {
    Intersection r;
    r.t = cross(w, db) / d;
    r.s = cross(w, da) / d;
    if (r.t.sign() < 0 || r.t > 1 || r.s.sign() < 0 || r.s > 1) return {};
    r.hit = Hit::kPoint;
    return r;
  }
  if (cross(w, da).sign() != 0) return {};
  // Collinear: parameters of b0, b1 along a.
  const Rational len2 = dot(da, da);
  const Rational u0 = dot(w, da) / len2;
  const Rational u1 = dot(b1 - a0, da) / len2;
  const Rational lo = std::max(Rational(0), std::min(u0, u1));
  const Rational hi = std::min(Rational(1), std::max(u0, u1));
  if (lo > hi) return {};
  if (lo < hi) return {Hit::kOverlap, {}, {}};
  Intersection r{Hit::kPoint, lo, {}};
  r.s = (lo - u0) / (u1 - u0);
  return r;
}

// Candidate integer translations m with box(a) meeting box(b) + m.
std::pair<std::int64_t, std::int64_t> range(double a0, double a1, double b0, double b1) {
  return {static_cast<std::int64_t>(std::ceil(a0 - b1)),
          static_cast<std::int64_t>(std::floor(a1 - b0))};
}

template <typename Visit>
void for_each_contact(const RealizedCurve& a, const RealizedCurve& b, Visit&& visit) {
  const std::size_t na = a.segment_count(), nb = b.segment_count();
  std::vector<Box> ba(na), bb(nb);
  for (std::size_t i = 0; i < na; ++i) ba[i] = bounds(a.seg_start(i), a.seg_end(i));
  for (std::size_t j = 0; j < nb; ++j) bb[j] = bounds(b.seg_start(j), b.seg_end(j));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const auto [mx0, mx1] = range(ba[i].x0, ba[i].x1, bb[j].x0, bb[j].x1);
      if (mx0 > mx1) continue;
      const auto [my0, my1] = range(ba[i].y0, ba[i].y1, bb[j].y0, bb[j].y1);
      for (std::int64_t mx = mx0; mx <= mx1; ++mx) {
        for (std::int64_t my = my0; my <= my1; ++my) {
          const Point2Q m{Rational(mx), Rational(my)};
          const Intersection x = intersect(a.seg_start(i), a.seg_end(i),
                                           b.seg_start(j) + m, b.seg_end(j) + m);
          if (x.hit != Hit::kNone) visit(i, j, mx, my, x);
        }
      }
    }
  }
}

Point2Q direction(const RealizedCurve& c, std::size_t i) {
  return c.seg_end(i) - c.seg_start(i);
}

// Incoming (pointing backwards) and outgoing rays at a point of the curve.
std::pair<Point2Q, Point2Q> rays(const RealizedCurve& c, std::size_t seg,
                                 const Rational& t) {
  const Point2Q out = direction(c, seg);
  if (t.sign() > 0) return {Point2Q{-out.x, -out.y}, out};
  const std::size_t prev = seg == 0 ? c.segment_count() - 1 : seg - 1;
  const Point2Q in = direction(c, prev);
  return {Point2Q{-in.x, -in.y}, out};
}

bool same_ray(const Point2Q& u, const Point2Q& v) {
  return cross(u, v).sign() == 0 && dot(u, v).sign() > 0;
}

// d strictly inside the counter-clockwise arc from u to w.
bool in_ccw_arc(const Point2Q& u, const Point2Q& w, const Point2Q& d) {
  const int cuw = cross(u, w).sign();
  if (cuw > 0) return cross(u, d).sign() > 0 && cross(d, w).sign() > 0;
  if (cuw < 0) return !(cross(w, d).sign() >= 0 && cross(d, u).sign() >= 0);
  return cross(u, d).sign() > 0;  // u, w opposite
}

struct Location {
  std::size_t seg;
  Rational t;
};

// Moves t == 1 to the start of the next segment. Returns true when this
// wraps past the last segment (the point is then v0 + class shift).
bool normalize(const RealizedCurve& c, Location& loc) {
  if (loc.t != 1) return false;
  loc.t = 0;
  if (++loc.seg < c.segment_count()) return false;
  loc.seg = 0;
  return true;
}

using ContactKey =
    std::tuple<std::size_t, Rational, std::size_t, Rational, std::int64_t, std::int64_t>;

std::string describe(const ContactKey& k) {
  std::ostringstream os;
  os << "segment " << std::get<0>(k) << " at t=" << std::get<1>(k) << " against segment "
     << std::get<2>(k) << " at t=" << std::get<3>(k);
  return os.str();
}

bool adjacent_vertex(const RealizedCurve& c, std::size_t i, std::size_t j, std::int64_t mx,
                     std::int64_t my, const Intersection& x) {
  const std::size_t k = c.segment_count();
  const auto shift = [&](std::size_t from) {
    return from == k - 1 ? std::pair{c.curve_class().p(), c.curve_class().q()}
                         : std::pair<std::int64_t, std::int64_t>{0, 0};
  };
  // end of i joined to start of j = i + 1
  if (j == (i + 1) % k && std::pair{mx, my} == shift(i) && x.t == 1 && x.s == 0) return true;
  // start of i joined to end of j = i - 1
  if (i == (j + 1) % k) {
    const auto s = shift(j);
    if (std::pair{mx, my} == std::pair{-s.first, -s.second} && x.t == 0 && x.s == 1) return true;
  }
  return false;
}

}  // namespace

Point2Q RealizedCurve::seg_end(std::size_t i) const {
  if (i + 1 < lift_.size()) return lift_[i + 1];
  return lift_.front() + shift_of(cls_);
}

RealizedCurve RealizedCurve::straight(const CurveClass& cls, const Point2Q& through) {
  return RealizedCurve({through}, cls, "straight");
}

RealizedCurve RealizedCurve::from_lift(std::vector<Point2Q> lift, const CurveClass& cls,
                                       std::string provenance) {
  if (lift.empty()) throw std::invalid_argument("curve needs at least one vertex");
  RealizedCurve c(std::move(lift), cls, std::move(provenance));
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    if (c.seg_start(i) == c.seg_end(i)) {
      throw std::invalid_argument("curve has a zero-length segment");
    }
  }
  if (!is_simple(c)) throw NonSimpleCurve("curve '" + c.provenance() + "' is not simple");
  return c;
}

RealizedCurve RealizedCurve::from_samples(std::span<const Vec2> samples, Vec2 closing_shift,
                                          std::string provenance) {
  const double px = std::nearbyint(closing_shift.x), py = std::nearbyint(closing_shift.y);
  if (std::fabs(px - closing_shift.x) > 1e-9 || std::fabs(py - closing_shift.y) > 1e-9) {
    throw std::invalid_argument("closing shift is not an integer vector");
  }
  std::vector<Point2Q> lift;
  lift.reserve(samples.size());
  for (const Vec2& s : samples) {
    Point2Q p{Rational::from_double(s.x), Rational::from_double(s.y)};
    if (lift.empty() || !(lift.back() == p)) lift.push_back(std::move(p));
  }
  const CurveClass cls(static_cast<std::int64_t>(px), static_cast<std::int64_t>(py));
  return from_lift(std::move(lift), cls, std::move(provenance));
}

bool is_simple(const RealizedCurve& c) {
  bool simple = true;
  for_each_contact(c, c,
                   [&](std::size_t i, std::size_t j, std::int64_t mx, std::int64_t my,
                       const Intersection& x) {
                     if (!simple) return;
                     if (i == j && mx == 0 && my == 0) return;
                     if (x.hit == Hit::kPoint && adjacent_vertex(c, i, j, mx, my, x)) return;
                     simple = false;
                   });
  return simple;
}

std::int64_t crossing_count(const RealizedCurve& a, const RealizedCurve& b) {
  std::set<ContactKey> contacts;
  for_each_contact(a, b,
                   [&](std::size_t i, std::size_t j, std::int64_t mx, std::int64_t my,
                       const Intersection& x) {
                     if (x.hit == Hit::kOverlap) {
                       throw TangentialContact("curves '" + a.provenance() + "' and '" +
                                               b.provenance() + "' overlap along a segment");
                     }
                     Location la{i, x.t}, lb{j, x.s};
                     if (normalize(a, la)) {
                       mx -= a.curve_class().p();
                       my -= a.curve_class().q();
                     }
                     if (normalize(b, lb)) {
                       mx += b.curve_class().p();
                       my += b.curve_class().q();
                     }
                     contacts.emplace(la.seg, la.t, lb.seg, lb.t, mx, my);
                   });
  for (const ContactKey& k : contacts) {
    const auto [ia, ib] = rays(a, std::get<0>(k), std::get<1>(k));
    const auto [ja, jb] = rays(b, std::get<2>(k), std::get<3>(k));
    for (const Point2Q& r : {ja, jb}) {
      if (same_ray(r, ia) || same_ray(r, ib)) {
        throw TangentialContact("curves share a direction at " + describe(k));
      }
    }
    if (in_ccw_arc(ib, ia, ja) == in_ccw_arc(ib, ia, jb)) {
      throw TangentialContact("curves touch without crossing at " + describe(k));
    }
  }
  return static_cast<std::int64_t>(contacts.size());
}

bool fine_adjacent(const RealizedCurve& a, const RealizedCurve& b) {
  return crossing_count(a, b) <= 1;
}

}  // namespace rotwidth::finegraph
