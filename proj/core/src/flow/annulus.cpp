#include "rotwidth/flow/annulus.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rotwidth::flow {

namespace {

double smootherstep(double t) { return t * t * t * (t * (6.0 * t - 15.0) + 10.0); }

constexpr double kZero = 1e-14;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double integral(const ScalarFn& f, double a, double b) {
  // Mapped to [-1, 1]; see the note in conjugacy.cpp.
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const auto g = [&](double t) { return f(mid + half * t); };
  return half * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, -1.0, 1.0, 15,
                                                                              1e-12);
}

double inverse_on(const ArcMap& phi, double y, double a, double b) {
  const auto fn = [&](double z) { return phi(z) - y; };
  double fa = fn(a), fb = fn(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      fn, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (r.first + r.second);
}

void check_contraction(const ArcMap& phi, const char* which, int grid) {
  if (std::fabs(phi(0.0)) > kZero) {
    throw NonAttractingFixedPoint(std::string(which) + " does not fix 0");
  }
  double prev = phi(-1.0);
  for (int i = 1; i <= grid; ++i) {
    const double x = -1.0 + 2.0 * i / grid;
    const double y = phi(x);
    if (!(y > prev)) {
      throw NonAttractingFixedPoint(std::string(which) + " is not increasing near x = " + fmt(x));
    }
    prev = y;
    if (x != 0.0 && !(std::fabs(y) < std::fabs(x) && y * x > 0.0)) {
      throw NonAttractingFixedPoint(std::string(which) + " is not a contraction towards 0 at x = " +
                                    fmt(x));
    }
  }
}

}  // namespace

AnnulusField model_field(const AnnulusModelParams& p) {
  const double lo = -1.0 + p.boundary, hi = 1.0 - p.boundary;
  const double a = p.y0 - p.plateau, b = p.y0 + p.plateau;
  if (!(p.r > 0.0) || !(p.boundary > 0.0) || !(p.plateau > 0.0) || !(lo < a) || !(b < hi)) {
    throw std::invalid_argument("model needs -1 < -1 + boundary < y0 - plateau and "
                                "y0 + plateau < 1 - boundary < 1, r > 0");
  }
  const double level = 1.0 / p.r;
  const double amp = p.v_amplitude, y0 = p.y0;
  AnnulusField f;
  f.tau = [=](double y) {
    if (y <= lo || y >= hi) return 0.0;
    if (y < a) return level * smootherstep((y - lo) / (a - lo));
    if (y > b) return level * smootherstep((hi - y) / (hi - b));
    return level;
  };
  f.v = [=](double y) { return amp * (y0 - y) * (1.0 - y * y); };
  std::ostringstream os;
  os << "model r=" << p.r << " y0=" << p.y0 << " v_amplitude=" << p.v_amplitude;
  f.description = os.str();
  return f;
}

bool AnnulusModelReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ChecklistItem& i) { return i.pass; });
}

AnnulusModelReport annulus_model(const AnnulusField& field, double r, double y0,
                                 const AnnulusCheckOptions& opts) {
  if (!(r > 0.0) || !(y0 > -1.0 && y0 < 1.0)) {
    throw std::invalid_argument("annulus model needs r > 0 and y0 in (-1, 1)");
  }
  const double level = 1.0 / r;
  constexpr int kScan = 2000;
  const double near = 1e-3;

  // Shape preconditions.
  for (const double y : {-1.0, -1.0 + near, 1.0 - near, 1.0}) {
    if (std::fabs(field.tau(y)) > kZero) {
      throw std::invalid_argument("tau must vanish near the boundary; tau(" + fmt(y) +
                                  ") = " + fmt(field.tau(y)));
    }
  }
  for (const double y : {y0 - near, y0, y0 + near}) {
    if (std::fabs(field.tau(y) - level) > 1e-12) {
      throw std::invalid_argument("tau must equal 1/r on an interval around y0");
    }
  }
  if (std::fabs(field.v(-1.0)) > kZero || std::fabs(field.v(1.0)) > kZero) {
    throw std::invalid_argument("v must vanish at -1 and 1");
  }
  AnnulusModelReport rep;
  rep.degenerate = true;
  std::vector<double> zeros;
  for (int i = 1; i < kScan; ++i) {
    const double y = -1.0 + 2.0 * i / kScan;
    const double v = field.v(y);
    if (std::fabs(v) > kZero) rep.degenerate = false;
    if (std::fabs(v) <= kZero) zeros.push_back(y);
  }
  if (!rep.degenerate) {
    for (int i = 1; i < kScan; ++i) {
      const double y = -1.0 + 2.0 * i / kScan;
      if (std::fabs(y - y0) < 1e-12) continue;
      const double v = field.v(y);
      if ((y < y0 && !(v > 0.0)) || (y > y0 && !(v < 0.0))) {
        throw std::invalid_argument("v must be positive below y0 and negative above; v(" +
                                    fmt(y) + ") = " + fmt(v));
      }
    }
  }
  const FlowOptions fo{opts.step};

  // (1) boundary fixed.
  {
    ChecklistItem& it = rep.items[0];
    it.name = "boundary fixed by the time-1 map";
    for (int i = 0; i < opts.samples; ++i) {
      const double x = static_cast<double>(i) / opts.samples;
      for (const double y : {-1.0, 1.0}) {
        it.measure = std::max(it.measure, annulus_distance(flow(field, {x, y}, 1.0, fo), {x, y}));
      }
    }
    it.pass = it.measure <= opts.boundary_tol;
    it.detail = "max displacement " + fmt(it.measure);
  }

  // (2) unique interior periodic orbit at y0 with period r.
  {
    ChecklistItem& it = rep.items[1];
    it.name = "unique periodic orbit at y0 with period r";
    const bool unique = std::all_of(zeros.begin(), zeros.end(),
                                    [&](double y) { return std::fabs(y - y0) < 2.0 / kScan; });
    const auto advance = [&](double t) { return flow(field, {0.0, y0}, t, fo).x - 1.0; };
    double hi = r;
    while (advance(hi) < 0.0 && hi < 1e6 * r) hi *= 2.0;
    double lo = hi / 2.0;
    while (advance(lo) > 0.0 && lo > 1e-9) lo /= 2.0;
    std::uintmax_t iters = 200;
    const auto b = boost::math::tools::toms748_solve(
        advance, lo, hi, boost::math::tools::eps_tolerance<double>(48), iters);
    rep.period = 0.5 * (b.first + b.second);
    rep.period_error = std::fabs(rep.period - r);
    it.measure = rep.period_error;
    it.pass = unique && rep.period_error < opts.period_tol;
    it.detail = unique ? "period " + fmt(rep.period) + ", error " + fmt(rep.period_error)
                       : "v vanishes away from y0 (" + std::to_string(zeros.size()) +
                             " sampled zeros): not a unique periodic orbit";
  }

  // (3) vertical segment through y0 positively invariant under phi^r.
  {
    ChecklistItem& it = rep.items[2];
    it.name = "vertical segment through y0 positively invariant under phi^r";
    double w = near;
    while (w < 1.0 && std::fabs(field.tau(y0 - 2 * w) - level) <= 1e-12 &&
           std::fabs(field.tau(y0 + 2 * w) - level) <= 1e-12 && y0 - 2 * w > -1.0 &&
           y0 + 2 * w < 1.0) {
      w *= 2.0;
    }
    bool inside = true;
    for (int i = 0; i < opts.samples; ++i) {
      const double y = y0 - w + 2.0 * w * i / (opts.samples - 1);
      const Vec2 q = flow(field, {0.0, y}, r, fo);
      it.measure = std::max(it.measure, std::fabs(q.x - std::nearbyint(q.x)));
      if (std::fabs(q.y - y0) > std::fabs(y - y0) + 1e-12) inside = false;
    }
    it.pass = inside && it.measure <= 1e-9;
    it.detail = "segment half-length " + fmt(w) + ", max horizontal drift " + fmt(it.measure);
  }

  // (4) sampled orbits converge to the orbit at y0.
  {
    ChecklistItem& it = rep.items[3];
    it.name = "sampled orbits converge to the periodic orbit";
    const double h = 1e-6;
    const double slope = (field.v(y0 + h) - field.v(y0 - h)) / (2 * h);
    if (rep.degenerate || !(slope < 0.0)) {
      it.pass = false;
      it.measure = INFINITY;
      it.detail = "no vertical contraction at y0";
    } else {
      double lip = 0.0;
      for (int i = 0; i < kScan; ++i) {
        const double y = -1.0 + 2.0 * i / kScan;
        lip = std::max(lip, std::fabs(field.v(y + 2.0 / kScan) - field.v(y)) * kScan / 2.0);
      }
      const double margin = 0.05;
      const double y_lo = -1.0 + margin, y_hi = 1.0 - margin;
      const double d = 0.1 * std::min(y0 + 1.0, 1.0 - y0);
      const ScalarFn inv = [&](double u) { return 1.0 / std::fabs(field.v(u)); };
      double approach = 0.0;
      if (y_lo < y0 - d) approach = std::max(approach, integral(inv, y_lo, y0 - d));
      if (y0 + d < y_hi) approach = std::max(approach, integral(inv, y0 + d, y_hi));
      rep.omega_horizon = approach + std::log(1e4) / -slope;
      const Field1D vertical(field.v, "vertical part");
      const FlowOptions vo{0.05 / lip};
      for (int i = 0; i < opts.samples; ++i) {
        const double y = y_lo + (y_hi - y_lo) * i / (opts.samples - 1);
        it.measure = std::max(it.measure, std::fabs(flow(vertical, y, rep.omega_horizon, vo) - y0));
      }
      it.pass = it.measure <= opts.omega_tol;
      it.detail = "horizon " + fmt(rep.omega_horizon) + ", max final |y - y0| " + fmt(it.measure);
    }
  }

  // Distance of the time-1 map to that of (tau, 0).
  const AnnulusField flat{field.tau, [](double) { return 0.0; }, "tau only"};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const Vec2 p{i / 8.0, -1.0 + j / 10.0};
      rep.perturbation_sup = std::max(
          rep.perturbation_sup, annulus_distance(flow(field, p, 1.0, fo), flow(flat, p, 1.0, fo)));
    }
  }
  return rep;
}

ConleySection ConleySection::horizontal(double y) {
  return {[y](double theta) { return Vec2{theta, y}; }, [y](Vec2 p) { return p.y - y; },
          "horizontal circle y = " + fmt(y)};
}

SectionReport validate_section(const AnnulusField& field, const ConleySection& c,
                               const std::vector<Vec2>& starts, double horizon, double step,
                               double margin) {
  const auto side = [&](Vec2 p) { return c.side({p.x - std::floor(p.x), p.y}); };
  SectionReport rep;
  rep.min_transversality = INFINITY;
  const double h = 1e-6;
  for (int i = 0; i < 64; ++i) {
    const Vec2 p = c.curve(i / 64.0);
    const Vec2 grad{(side({p.x + h, p.y}) - side({p.x - h, p.y})) / (2 * h),
                    (side({p.x, p.y + h}) - side({p.x, p.y - h})) / (2 * h)};
    const Vec2 f = field(p);
    rep.min_transversality =
        std::min(rep.min_transversality, (f.x * grad.x + f.y * grad.y) / norm(grad));
  }
  for (const Vec2& s : starts) {
    Vec2 p = s;
    double prev = side(p);
    int crossings = 0;
    const auto n = static_cast<std::int64_t>(std::ceil(horizon / step));
    for (std::int64_t k = 0; k < n; ++k) {
      p = flow(field, p, horizon / n, {step});
      const double cur = side(p);
      if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) ++crossings;
      prev = cur;
    }
    rep.max_crossings = std::max(rep.max_crossings, crossings);
  }
  rep.ok = rep.min_transversality >= margin && rep.max_crossings <= 1;
  return rep;
}

double ArcConjugacy::operator()(double x) const {
  if (x == 0.0) return 0.0;
  constexpr int kMaxTransport = 100000;
  double y = x;
  int k = 0;
  double out;
  if (x > 0.0) {
    const double a1 = phi1_(1.0), a2 = phi2_(1.0);
    while (y < a1) {
      y = inverse_on(phi1_, y, y, 1.0);
      if (++k > kMaxTransport) throw std::runtime_error("point too close to the fixed point");
    }
    out = a2 + (y - a1) * (1.0 - a2) / (1.0 - a1);
  } else {
    const double b1 = phi1_(-1.0), b2 = phi2_(-1.0);
    while (y > b1) {
      y = inverse_on(phi1_, y, -1.0, y);
      if (++k > kMaxTransport) throw std::runtime_error("point too close to the fixed point");
    }
    out = -1.0 + (y + 1.0) * (b2 + 1.0) / (b1 + 1.0);
  }
  for (int i = 0; i < k; ++i) out = phi2_(out);
  return out;
}

ArcConjugacy equivariant_arc_conjugacy(ArcMap phi1, ArcMap phi2, int grid) {
  if (grid < 2) throw std::invalid_argument("grid needs >= 2 points");
  check_contraction(phi1, "first map", grid);
  check_contraction(phi2, "second map", grid);
  ArcConjugacy h(std::move(phi1), std::move(phi2));
  for (int i = 0; i <= grid; ++i) {
    const double x = -1.0 + 2.0 * i / grid;
    h.residual_ = std::max(h.residual_, std::fabs(h(h.phi1_(x)) - h.phi2_(h(x))));
  }
  return h;
}

}  // namespace rotwidth::flow
