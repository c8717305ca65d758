#include "rotwidth/flow/field.hpp"

#include <math.h>  // boost 1.74 pchip calls unqualified isnan

#include <boost/math/interpolators/pchip.hpp>

#include <cmath>
#include <sstream>

namespace rotwidth::flow {

Field1D::Field1D(ScalarFn x, std::string description, std::string smoothness)
    : x_(std::move(x)), description_(std::move(description)), smoothness_(std::move(smoothness)) {
  if (!x_) throw std::invalid_argument("empty field evaluator");
}

Field1D Field1D::constant(double c) {
  std::ostringstream os;
  os << "constant " << c;
  return Field1D([c](double) { return c; }, os.str(), "analytic");
}

Field1D Field1D::sampled(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() != values.size() || knots.size() < 4) {
    throw std::invalid_argument("sampled field needs >= 4 matching knots and values");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1])) throw std::invalid_argument("knots must increase");
  }
  const double lo = knots.front(), hi = knots.back();
  const double vlo = values.front(), vhi = values.back();
  auto spline = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
      std::move(knots), std::move(values));
  std::ostringstream os;
  os << "pchip on [" << lo << ", " << hi << "]";
  return Field1D(
      [spline, lo, hi, vlo, vhi](double y) {
        if (y <= lo) return vlo;
        if (y >= hi) return vhi;
        return (*spline)(y);
      },
      os.str(), "C1");
}

Field1D Field1D::scaled(ScalarFn s, const std::string& what) const {
  ScalarFn base = x_;
  return Field1D([base, s = std::move(s)](double y) { return s(y) * base(y); },
                 what + " * (" + description_ + ")", smoothness_);
}

namespace {

std::int64_t step_count(double t, const FlowOptions& opts) {
  if (!(opts.step > 0.0)) throw std::invalid_argument("flow step must be positive");
  const double n = std::ceil(std::fabs(t) / opts.step);
  if (n > static_cast<double>(opts.max_steps)) {
    std::ostringstream os;
    os << "flow for time " << t << " needs " << n << " steps (limit " << opts.max_steps << ")";
    throw FlowError(os.str());
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace

double flow(const Field1D& f, double x, double t, const FlowOptions& opts) {
  const std::int64_t n = step_count(t, opts);
  if (n == 0) return x;
  const double h = t / static_cast<double>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double k1 = f(x);
    const double k2 = f(x + 0.5 * h * k1);
    const double k3 = f(x + 0.5 * h * k2);
    const double k4 = f(x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  if (!std::isfinite(x)) throw FlowError("flow left the finite range");
  return x;
}

Vec2 flow(const AnnulusField& f, Vec2 p, double t, const FlowOptions& opts) {
  const std::int64_t n = step_count(t, opts);
  if (n == 0) return p;
  const double h = t / static_cast<double>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const Vec2 k1 = f(p);
    const Vec2 k2 = f(p + (0.5 * h) * k1);
    const Vec2 k3 = f(p + (0.5 * h) * k2);
    const Vec2 k4 = f(p + h * k3);
    p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw FlowError("flow left the finite range");
  return p;
}

double annulus_distance(Vec2 a, Vec2 b) {
  double dx = a.x - b.x;
  dx -= std::nearbyint(dx);
  return std::hypot(dx, a.y - b.y);
}

Richardson flow_richardson(const Field1D& f, double x, double t, double step) {
  Richardson r;
  r.coarse = flow(f, x, t, {step});
  r.fine = flow(f, x, t, {step / 2});
  r.error_estimate = std::fabs(r.fine - r.coarse) / 15.0;
  return r;
}

}  // namespace rotwidth::flow
