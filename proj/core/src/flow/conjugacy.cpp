#include "rotwidth/flow/conjugacy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rotwidth::flow {

namespace detail {

// int_lo^y F(u) du from a table of per-panel adaptive Gauss-Kronrod sums.
class CumulativeIntegral {
 public:
  CumulativeIntegral(ScalarFn f, double lo, double hi, int panels)
      : f_(std::move(f)), lo_(lo), hi_(hi), h_((hi - lo) / panels) {
    cum_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
    for (int k = 0; k < panels; ++k) {
      cum_[k + 1] = cum_[k] + segment(knot(k), knot(k + 1));
    }
  }

  double operator()(double y) const {
    if (y <= lo_) return 0.0;
    if (y >= hi_) return cum_.back();
    const auto k = std::min(static_cast<std::size_t>((y - lo_) / h_), cum_.size() - 2);
    return cum_[k] + segment(knot(static_cast<int>(k)), y);
  }

  double total() const { return cum_.back(); }

 private:
  double knot(int k) const {
    return k + 1 == static_cast<int>(cum_.size()) ? hi_ : lo_ + k * h_;
  }
  double segment(double a, double b) const {
    if (b <= a) return 0.0;
    // Integrate on [-1, 1]: boost 1.74 compares a scaled estimate with an
    // unscaled error and never stops refining short intervals otherwise.
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const auto g = [&](double t) { return f_(mid + half * t); };
    return half * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, -1.0, 1.0, 12,
                                                                                1e-13);
  }

  ScalarFn f_;
  double lo_, hi_, h_;
  std::vector<double> cum_;
};

}  // namespace detail

namespace {

constexpr int kPanels = 256;

// Root of a monotone function on [a, b] given the bracket values.
double solve_monotone(const ScalarFn& fn, double a, double b) {
  double fa = fn(a), fb = fn(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(fn, a, b, fa, fb,
                                                   boost::math::tools::eps_tolerance<double>(52),
                                                   iters);
  return 0.5 * (r.first + r.second);
}

double smootherstep(double t) { return t * t * t * (t * (6.0 * t - 15.0) + 10.0); }

// 1 on [lo + ramp, hi - ramp], 0 outside (lo, hi).
double bump(double u, double lo, double hi, double ramp) {
  if (u <= lo || u >= hi) return 0.0;
  if (u < lo + ramp) return smootherstep((u - lo) / ramp);
  if (u > hi - ramp) return smootherstep((hi - u) / ramp);
  return 1.0;
}

void check_window(double lo, double hi, double ramp) {
  if (!(ramp > 0.0) || !(hi - lo >= 2.0 * ramp)) {
    throw std::invalid_argument("window needs ramp > 0 and hi - lo >= 2 ramp");
  }
}

}  // namespace

ConstantConjugacy::ConstantConjugacy(std::shared_ptr<const detail::CumulativeIntegral> g,
                                     double lo, double hi, double shift)
    : g_(std::move(g)), lo_(lo), hi_(hi), shift_(shift), increasing_(g_->total() > 0) {}

double ConstantConjugacy::operator()(double y) const {
  if (y < lo_ || y > hi_) {
    std::ostringstream os;
    os << "point " << y << " outside the conjugacy domain [" << lo_ << ", " << hi_ << "]";
    throw std::out_of_range(os.str());
  }
  return (*g_)(y)-shift_;
}

double ConstantConjugacy::inverse(double z) const {
  const double target = z + shift_;
  const double total = g_->total();
  if ((increasing_ && (target < 0.0 || target > total)) ||
      (!increasing_ && (target > 0.0 || target < total))) {
    std::ostringstream os;
    os << "value " << z << " outside the range of the conjugacy";
    throw std::out_of_range(os.str());
  }
  return solve_monotone([&](double y) { return (*g_)(y)-target; }, lo_, hi_);
}

ConstantConjugacy conjugate_to_constant(const Field1D& x, double lo, double hi, double origin) {
  if (!(hi > lo) || origin < lo || origin > hi) {
    throw std::invalid_argument("conjugacy needs lo < hi and origin in [lo, hi]");
  }
  const int samples = 32 * kPanels;
  int sign = 0;
  for (int i = 0; i <= samples; ++i) {
    const double y = lo + (hi - lo) * i / samples;
    const double v = x(y);
    const int sg = (v > 0.0) - (v < 0.0);
    if (sg == 0 || (sign != 0 && sg != sign) || !std::isfinite(v)) {
      std::ostringstream os;
      os << "field '" << x.description() << "' vanishes near y = " << y;
      throw DivergentIntegral(os.str());
    }
    sign = sg;
  }
  auto g = std::make_shared<const detail::CumulativeIntegral>(
      [x](double u) { return 1.0 / x(u); }, lo, hi, kPanels);
  const double shift = (*g)(origin);
  return ConstantConjugacy(std::move(g), lo, hi, shift);
}

SlowdownProfile::SlowdownProfile(ScalarFn s, double tau_minus, double tau_plus, double floor,
                                 std::string description)
    : s_(std::move(s)),
      tau_minus_(tau_minus),
      tau_plus_(tau_plus),
      floor_(floor),
      description_(std::move(description)) {
  if (!(floor > 0.0) || floor > 1.0) {
    throw std::invalid_argument("slowdown floor must lie in (0, 1]; a zero floor is a stopping "
                                "profile");
  }
  if (tau_plus < tau_minus) throw std::invalid_argument("slowdown support is reversed");
  for (int i = 0; i <= 1000; ++i) {
    const double u = tau_minus + (tau_plus - tau_minus) * i / 1000.0;
    const double v = s_(u);
    if (!(v >= floor * (1 - 1e-15)) || v > 1.0 + 1e-15) {
      std::ostringstream os;
      os << "slowdown value " << v << " at u = " << u << " outside [" << floor << ", 1]";
      throw std::invalid_argument(os.str());
    }
  }
}

SlowdownProfile SlowdownProfile::window(double lo, double hi, double floor, double ramp) {
  check_window(lo, hi, ramp);
  std::ostringstream os;
  os << "window [" << lo << ", " << hi << "] floor " << floor << " ramp " << ramp;
  return SlowdownProfile(
      [=](double u) { return floor + (1.0 - floor) * (1.0 - bump(u, lo, hi, ramp)); }, lo, hi,
      floor, os.str());
}

SlowdownProfile SlowdownProfile::identity() {
  return SlowdownProfile([](double) { return 1.0; }, 0.0, 0.0, 1.0, "identity");
}

double SlowdownProfile::operator()(double u) const {
  if (u <= tau_minus_ || u >= tau_plus_) return 1.0;
  return s_(u);
}

StoppingProfile StoppingProfile::window(double lo, double hi, double ramp) {
  check_window(lo, hi, ramp);
  return StoppingProfile(lo, hi, ramp);
}

double StoppingProfile::operator()(double u) const { return 1.0 - bump(u, lo_, hi_, ramp_); }

SlowdownProfile StoppingProfile::relaxed(double eps) const {
  return SlowdownProfile::window(lo_, hi_, eps, ramp_);
}

double SlowdownConjugacy::g(double y) const {
  if (!excess_) return y;
  return y + (*excess_)(y) - t_minus_;
}

double SlowdownConjugacy::f(double x) const {
  if (x <= tail_lo()) return x + t_minus_;
  if (x >= tail_hi()) return x + t_plus_;
  return solve_monotone([&](double y) { return g(y) - x; }, tau_minus_, tau_plus_);
}

double SlowdownConjugacy::f_inverse(double y) const { return g(y); }

SlowdownConjugacy slowdown_conjugacy_1d(const SlowdownProfile& s) {
  SlowdownConjugacy c;
  c.tau_minus_ = s.tau_minus();
  c.tau_plus_ = s.tau_plus();
  if (s.tau_plus() > s.tau_minus()) {
    c.excess_ = std::make_shared<const detail::CumulativeIntegral>(
        [s](double u) { return 1.0 / s(u) - 1.0; }, s.tau_minus(), s.tau_plus(), kPanels);
    // g(y) = int_0^y du / s = y + I(y) - I(0), I the cumulative excess;
    // below the window f(x) = x + I(0), above it f(x) = x + I(0) - I(tau+).
    c.t_minus_ = (*c.excess_)(0.0);
    c.t_plus_ = c.t_minus_ - c.excess_->total();
  }
  return c;
}

void slowdown_conjugacy_1d(const StoppingProfile& s) {
  const auto [a, b] = s.zero_set();
  std::ostringstream os;
  os << "int du / s diverges: the stopping profile vanishes on [" << a << ", " << b << "]";
  throw DivergentIntegral(os.str());
}

LineChart::LineChart(const Field1D& x, double c0, double lo, double hi)
    : g_(conjugate_to_constant(x, lo, hi, c0)) {}

ConjugacyReport verify_conjugacy(const Field1D& x, const Field1D& y, const Map1D& h,
                                 const std::vector<double>& grid, double step, double tol) {
  ConjugacyReport r;
  r.tolerance = tol;
  for (const double p : grid) {
    const double hp = h(p);
    for (const double t : {0.25, 0.5, 1.0}) {
      const double lhs = h(flow(x, p, t, {step}));
      const double rhs = flow(y, hp, t, {step});
      const double d = std::fabs(lhs - rhs);
      ++r.checks;
      if (d > r.sup_residual) {
        r.sup_residual = d;
        r.worst_point = p;
        r.worst_time = t;
      }
    }
  }
  r.pass = r.sup_residual < tol;
  return r;
}

ConjugacyReport verify_slowdown(const SlowdownProfile& s, double step, double tol,
                                int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");
  const SlowdownConjugacy c = slowdown_conjugacy_1d(s);
  std::vector<double> grid;
  const double lo = s.tau_minus() - 2.0, hi = s.tau_plus() + 2.0;
  for (int i = 0; i < grid_points; ++i) grid.push_back(lo + (hi - lo) * i / (grid_points - 1));
  return verify_conjugacy(Field1D::constant(1.0),
                          Field1D([s](double u) { return s(u); }, s.description()),
                          [&c](double u) { return c.f(u); }, grid, step, tol);
}

}  // namespace rotwidth::flow
