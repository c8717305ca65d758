#include "rotwidth/lattice/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rotwidth::lattice {

bool lex_less(const Point2Q& a, const Point2Q& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rational orient(const Point2Q& o, const Point2Q& a, const Point2Q& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

PrimitiveVector::PrimitiveVector(std::int64_t a, std::int64_t b)
    : a_(a), b_(b) {
  if (a == 0 && b == 0) {
    throw std::invalid_argument("primitive vector cannot be (0, 0)");
  }
  if (std::gcd(a, b) != 1) {
    throw std::invalid_argument("vector (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") is not primitive");
  }
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b,
                                   std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const __int128 det = static_cast<__int128>(a) * d -
                       static_cast<__int128>(b) * c;
  if (det != 1) throw std::invalid_argument("matrix is not in SL2(Z)");
}

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                             std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

UnimodularMatrix UnimodularMatrix::with_first_row(const PrimitiveVector& w) {
  // a*d - b*c = 1 with d = s, c = -t where s*a + t*b = 1.
  auto [g, s, t] = ext_gcd(w.a(), w.b());
  (void)g;
  return {w.a(), w.b(), -t, s};
}

Point2Q UnimodularMatrix::apply(const Point2Q& p) const {
  return {Rational(a_) * p.x + Rational(b_) * p.y,
          Rational(c_) * p.x + Rational(d_) * p.y};
}

UnimodularMatrix operator*(const UnimodularMatrix& l,
                           const UnimodularMatrix& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

int ConvexPolygonQ::dimension() const {
  if (vertices_.size() <= 1) return 0;
  return vertices_.size() == 2 ? 1 : 2;
}

ConvexPolygonQ ConvexPolygonQ::translated(const Point2Q& offset) const {
  std::vector<Point2Q> v = vertices_;
  for (auto& p : v) {
    p.x += offset.x;
    p.y += offset.y;
  }
  return ConvexPolygonQ(std::move(v));
}

ConvexPolygonQ ConvexPolygonQ::scaled(const Rational& r) const {
  if (r.sign() <= 0) throw std::invalid_argument("scale factor must be > 0");
  std::vector<Point2Q> v = vertices_;
  for (auto& p : v) {
    p.x *= r;
    p.y *= r;
  }
  return ConvexPolygonQ(std::move(v));
}

ConvexPolygonQ convex_hull(std::span<const Point2Q> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of no points");
  std::vector<Point2Q> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return ConvexPolygonQ(std::move(pts));

  // Andrew's monotone chain; a non-positive turn pops, so collinear boundary
  // points are dropped.
  std::vector<Point2Q> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexPolygonQ(std::move(hull));
}

Rational directional_width(const ConvexPolygonQ& c, const PrimitiveVector& w) {
  const Rational a(w.a()), b(w.b());
  Rational lo, hi;
  bool first = true;
  for (const auto& p : c.vertices()) {
    Rational v = a * p.x + b * p.y;
    if (first) {
      lo = v;
      hi = v;
      first = false;
    } else if (v < lo) {
      lo = std::move(v);
    } else if (v > hi) {
      hi = std::move(v);
    }
  }
  return hi - lo;
}

ConvexPolygonQ apply_unimodular(const UnimodularMatrix& m,
                                const ConvexPolygonQ& c) {
  std::vector<Point2Q> image;
  image.reserve(c.size());
  for (const auto& p : c.vertices()) image.push_back(m.apply(p));
  return convex_hull(image);
}

double min_geometric_width(const ConvexPolygonQ& c) {
  if (c.dimension() < 2) {
    throw std::invalid_argument("geometric width needs a 2-dimensional polygon");
  }
  const auto& v = c.vertices();
  const std::size_t n = v.size();
  auto next = [n](std::size_t i) { return (i + 1) % n; };

  // Rotating calipers: the antipodal vertex of edge i only moves forward.
  Rational best_sq;
  bool have = false;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2Q& p = v[i];
    const Point2Q& q = v[next(i)];
    if (i == 0) j = next(i);
    while (orient(p, q, v[next(j)]) > orient(p, q, v[j])) j = next(j);
    const Rational area2 = orient(p, q, v[j]);
    const Rational dx = q.x - p.x, dy = q.y - p.y;
    Rational sq = area2 * area2 / (dx * dx + dy * dy);
    if (!have || sq < best_sq) {
      best_sq = std::move(sq);
      have = true;
    }
  }
  // mpq -> double truncates toward zero; the two nextafter steps absorb the
  // half-ulp rounding of sqrt.
  double w = std::sqrt(best_sq.to_double());
  w = std::nextafter(w, 0.0);
  w = std::nextafter(w, 0.0);
  return w;
}

namespace {

const PrimitiveVector kSeeds[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

struct Seeded {
  Rational width;
  PrimitiveVector direction{1, 0};
};

Seeded best_seed(const ConvexPolygonQ& c) {
  Seeded s{directional_width(c, kSeeds[0]), kSeeds[0]};
  for (const auto& w : std::span(kSeeds).subspan(1)) {
    Rational wd = directional_width(c, w);
    if (wd < s.width) s = {std::move(wd), w};
  }
  return s;
}

std::int64_t radius_from(const Rational& w0, double g) {
  const double r = w0.to_double() / g;
  return static_cast<std::int64_t>(std::ceil(r * (1.0 + 1e-12))) + 1;
}

// Primitive direction annihilating the segment direction of a 1-dim polygon.
PrimitiveVector annihilator(const ConvexPolygonQ& c) {
  const Rational dx = c.vertices()[1].x - c.vertices()[0].x;
  const Rational dy = c.vertices()[1].y - c.vertices()[0].y;
  // Clear denominators, then divide by the gcd.
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), dx.raw().get_den_mpz_t(), dy.raw().get_den_mpz_t());
  const Rational L{l};
  mpz_class p = (dx * L).numerator(), q = (dy * L).numerator();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (!p.fits_slong_p() || !q.fits_slong_p()) {
    throw std::overflow_error("segment direction too large for int64");
  }
  // w = (-q, p) is orthogonal to (p, q); normalise the sign.
  std::int64_t a = -q.get_si(), b = p.get_si();
  if (b < 0 || (b == 0 && a < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

// Width as a function of integer direction, evaluated exactly.
Rational width_of(const ConvexPolygonQ& c, std::int64_t a, std::int64_t b) {
  const Rational ra(a), rb(b);
  Rational lo, hi;
  bool first = true;
  for (const auto& p : c.vertices()) {
    Rational v = ra * p.x + rb * p.y;
    if (first) {
      lo = v;
      hi = v;
      first = false;
    } else if (v < lo) {
      lo = std::move(v);
    } else if (v > hi) {
      hi = std::move(v);
    }
  }
  return hi - lo;
}

struct Basis {
  std::int64_t b1a, b1b, b2a, b2b;
};

// Generalised Gauss reduction for the (polygon) width norm. Returns a basis
// whose first vector has small width; used only to condition the search.
Basis gauss_reduce(const ConvexPolygonQ& c) {
  Basis e{1, 0, 0, 1};
  Rational n1 = width_of(c, e.b1a, e.b1b);
  Rational n2 = width_of(c, e.b2a, e.b2b);
  if (n2 < n1) {
    std::swap(e.b1a, e.b2a);
    std::swap(e.b1b, e.b2b);
    std::swap(n1, n2);
  }
  auto shifted = [&](std::int64_t mu) {
    return width_of(c, e.b2a - mu * e.b1a, e.b2b - mu * e.b1b);
  };
  for (int iter = 0; iter < 200; ++iter) {
    // width(b2 - mu*b1) is convex in mu: find the integer minimiser by
    // bracketing with doubling steps then bisecting on the forward slope.
    std::int64_t lo = 0, hi = 0;
    if (shifted(1) < shifted(0)) {
      std::int64_t step = 1;
      while (shifted(step + 1) < shifted(step) && step < (1LL << 40)) step *= 2;
      lo = step / 2;
      hi = step + 1;
    } else if (shifted(-1) < shifted(0)) {
      std::int64_t step = 1;
      while (shifted(-step - 1) < shifted(-step) && step < (1LL << 40)) step *= 2;
      lo = -step - 1;
      hi = -step / 2;
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (shifted(mid + 1) < shifted(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    std::int64_t mu = lo;
    if (hi != lo && shifted(hi) < shifted(lo)) mu = hi;
    if (mu != 0) {
      e.b2a -= mu * e.b1a;
      e.b2b -= mu * e.b1b;
      n2 = width_of(c, e.b2a, e.b2b);
    }
    if (n2 < n1) {
      std::swap(e.b1a, e.b2a);
      std::swap(e.b1b, e.b2b);
      std::swap(n1, n2);
    } else {
      break;
    }
  }
  return e;
}

}  // namespace

std::int64_t enumeration_radius(const ConvexPolygonQ& c) {
  if (c.dimension() == 0) return 1;
  if (c.dimension() == 1) {
    const PrimitiveVector w = annihilator(c);
    return std::max<std::int64_t>(1, std::max(std::abs(w.a()), std::abs(w.b())));
  }
  return radius_from(best_seed(c).width, min_geometric_width(c));
}

EssentialWidth essential_width_with_direction(const ConvexPolygonQ& c) {
  if (c.dimension() == 0) return {Rational(0), PrimitiveVector(1, 0)};
  if (c.dimension() == 1) return {Rational(0), annihilator(c)};

  // Condition the polygon with a reduced basis A, then run the seeded disk
  // search on A.c. Width of A.c along w' equals width of c along A^T w'.
  const Basis e = gauss_reduce(c);
  UnimodularMatrix A = UnimodularMatrix::identity();
  {
    const __int128 det = static_cast<__int128>(e.b1a) * e.b2b -
                         static_cast<__int128>(e.b1b) * e.b2a;
    A = det == 1 ? UnimodularMatrix(e.b1a, e.b1b, e.b2a, e.b2b)
                 : UnimodularMatrix(e.b1a, e.b1b, -e.b2a, -e.b2b);
  }
  const ConvexPolygonQ reduced = apply_unimodular(A, c);

  Seeded seed = best_seed(reduced);
  const double g = min_geometric_width(reduced);
  const std::int64_t radius = radius_from(seed.width, g);

  // Pre-screen in double precision, confirm candidates exactly.
  std::vector<std::pair<double, double>> vd;
  double scale = 0.0;
  for (const auto& p : reduced.vertices()) {
    vd.emplace_back(p.x.to_double(), p.y.to_double());
    scale = std::max({scale, std::abs(vd.back().first),
                      std::abs(vd.back().second)});
  }
  auto width_d = [&vd](std::int64_t a, std::int64_t b) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (auto [x, y] : vd) {
      const double v = static_cast<double>(a) * x + static_cast<double>(b) * y;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi - lo;
  };

  struct Cand {
    double w;
    std::int64_t a, b;
  };
  std::vector<Cand> cands;
  double best_d = seed.width.to_double();
  const double r2 = static_cast<double>(radius) * static_cast<double>(radius);
  for (std::int64_t b = 0; b <= radius; ++b) {
    for (std::int64_t a = -radius; a <= radius; ++a) {
      if (b == 0 && a <= 0) continue;
      if (static_cast<double>(a) * a + static_cast<double>(b) * b > r2) continue;
      if (std::gcd(a, b) != 1) continue;
      const double w = width_d(a, b);
      const double slack =
          1e-9 * (1.0 + best_d) +
          1e-13 * static_cast<double>(std::abs(a) + std::abs(b)) * scale;
      if (w <= best_d + slack) {
        cands.push_back({w, a, b});
        best_d = std::min(best_d, w);
      }
    }
  }

  Rational best = seed.width;
  PrimitiveVector best_dir = seed.direction;
  for (const auto& cd : cands) {
    const double slack =
        1e-9 * (1.0 + best_d) +
        1e-13 * static_cast<double>(std::abs(cd.a) + std::abs(cd.b)) * scale;
    if (cd.w > best_d + slack) continue;
    Rational w = width_of(reduced, cd.a, cd.b);
    if (w < best) {
      best = std::move(w);
      best_dir = PrimitiveVector(cd.a, cd.b);
    }
  }
  // Map back: w = A^T w'.
  const std::int64_t wa = A.a() * best_dir.a() + A.c() * best_dir.b();
  const std::int64_t wb = A.b() * best_dir.a() + A.d() * best_dir.b();
  return {std::move(best), PrimitiveVector(wa, wb)};
}

Rational essential_width(const ConvexPolygonQ& c) {
  return essential_width_with_direction(c).width;
}

Rational ew_oracle(const ConvexPolygonQ& c, std::int64_t radius) {
  if (radius < 1) throw std::invalid_argument("oracle radius must be >= 1");

  // Integer path: scale by the common denominator when it is small enough.
  mpz_class l = 1;
  mpz_class max_num = 0;
  for (const auto& p : c.vertices()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.x.raw().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.raw().get_den_mpz_t());
  }
  std::vector<std::pair<mpz_class, mpz_class>> scaled;
  for (const auto& p : c.vertices()) {
    mpz_class x = p.x.numerator() * (l / p.x.denominator());
    mpz_class y = p.y.numerator() * (l / p.y.denominator());
    max_num = std::max(max_num, mpz_class(::abs(x)));
    max_num = std::max(max_num, mpz_class(::abs(y)));
    scaled.emplace_back(std::move(x), std::move(y));
  }
  const mpz_class bound = max_num * radius * 4;
  if (bound.fits_slong_p() && bound < mpz_class("1000000000000000000")) {
    std::vector<std::pair<std::int64_t, std::int64_t>> iv;
    for (const auto& [x, y] : scaled) iv.emplace_back(x.get_si(), y.get_si());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t a = -radius; a <= radius; ++a) {
      for (std::int64_t b = 0; b <= radius; ++b) {
        if (b == 0 && a <= 0) continue;
        if (std::gcd(a, b) != 1) continue;
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (auto [x, y] : iv) {
          const std::int64_t v = a * x + b * y;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        best = std::min(best, hi - lo);
      }
    }
    return Rational(mpq_class(mpz_class(static_cast<long>(best)), l));
  }

  Rational best;
  bool have = false;
  for (std::int64_t a = -radius; a <= radius; ++a) {
    for (std::int64_t b = 0; b <= radius; ++b) {
      if (b == 0 && a <= 0) continue;
      if (std::gcd(a, b) != 1) continue;
      Rational w = width_of(c, a, b);
      if (!have || w < best) {
        best = std::move(w);
        have = true;
      }
    }
  }
  return best;
}

namespace {

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coordinate out of range");
  return z.get_si();
}

// Vertical slice of the closed polygon at abscissa X: [lo, hi], or nothing.
bool slice(const ConvexPolygonQ& c, const Rational& X, Rational& lo,
           Rational& hi) {
  const auto& v = c.vertices();
  const std::size_t n = v.size();
  bool any = false;
  auto take = [&](const Rational& y) {
    if (!any) {
      lo = y;
      hi = y;
      any = true;
    } else if (y < lo) {
      lo = y;
    } else if (y > hi) {
      hi = y;
    }
  };
  if (n == 1) {
    if (v[0].x == X) take(v[0].y);
    return any;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2Q& p = v[i];
    const Point2Q& q = v[(i + 1) % n];
    const Rational& x0 = std::min(p.x, q.x);
    const Rational& x1 = std::max(p.x, q.x);
    if (X < x0 || X > x1) continue;
    if (p.x == q.x) {
      take(p.y);
      take(q.y);
    } else {
      take(p.y + (q.y - p.y) * (X - p.x) / (q.x - p.x));
    }
  }
  return any;
}

void x_range(const ConvexPolygonQ& c, Rational& lo, Rational& hi) {
  lo = hi = c.vertices().front().x;
  for (const auto& p : c.vertices()) {
    if (p.x < lo) lo = p.x;
    if (p.x > hi) hi = p.x;
  }
}

}  // namespace

std::vector<IntPoint> interior_lattice_points(const ConvexPolygonQ& c) {
  std::vector<IntPoint> out;
  if (c.dimension() < 2) return out;
  Rational xlo, xhi;
  x_range(c, xlo, xhi);
  // Strictly inside: xlo < X < xhi and lo < Y < hi on the slice.
  for (std::int64_t X = to_i64(floor(xlo)) + 1; Rational(X) < xhi; ++X) {
    if (!(Rational(X) > xlo)) continue;
    Rational lo, hi;
    if (!slice(c, Rational(X), lo, hi)) continue;
    for (std::int64_t Y = to_i64(floor(lo)) + 1; Rational(Y) < hi; ++Y) {
      out.push_back({X, Y});
    }
  }
  return out;
}

std::vector<IntPoint> lattice_points(const ConvexPolygonQ& c) {
  std::vector<IntPoint> out;
  Rational xlo, xhi;
  x_range(c, xlo, xhi);
  for (std::int64_t X = to_i64(ceil(xlo)); Rational(X) <= xhi; ++X) {
    Rational lo, hi;
    if (!slice(c, Rational(X), lo, hi)) continue;
    for (std::int64_t Y = to_i64(ceil(lo)); Rational(Y) <= hi; ++Y) {
      out.push_back({X, Y});
    }
  }
  return out;
}

bool has_three_nonaligned(std::span<const IntPoint> pts) {
  if (pts.size() < 3) return false;
  const IntPoint p0 = pts[0];
  std::size_t i = 1;
  while (i < pts.size() && pts[i] == p0) ++i;
  if (i == pts.size()) return false;
  const IntPoint p1 = pts[i];
  for (const auto& p : pts) {
    const __int128 cross =
        static_cast<__int128>(p1.x - p0.x) * (p.y - p0.y) -
        static_cast<__int128>(p1.y - p0.y) * (p.x - p0.x);
    if (cross != 0) return true;
  }
  return false;
}

bool has_three_nonaligned_interior(const ConvexPolygonQ& c) {
  const auto pts = interior_lattice_points(c);
  return has_three_nonaligned(pts);
}

CompareWidthVerdict check_compare_width(const ConvexPolygonQ& c) {
  CompareWidthVerdict v;
  v.ew = essential_width(c);
  v.has3 = has_three_nonaligned_interior(c);
  v.implication1_ok = !v.has3 || v.ew > Rational(1);
  v.implication2_ok = v.ew <= Rational(4) || v.has3;
  return v;
}

}  // namespace rotwidth::lattice
