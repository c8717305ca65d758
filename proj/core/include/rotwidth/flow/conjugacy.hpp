#pragma once

// One-dimensional conjugacies: a non-vanishing field is conjugate to the
// constant field through g(y) = int_0^y du / X(u), and slowing a field
// down by s is conjugating it by f = g^{-1} with g' = 1 / s.

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotwidth/flow/field.hpp"

namespace rotwidth::flow {

class DivergentIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
class CumulativeIntegral;
}

/// g(y) = int_origin^y du / X(u) on [lo, hi], with its inverse.
class ConstantConjugacy {
 public:
  double operator()(double y) const;
  double inverse(double z) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  friend ConstantConjugacy conjugate_to_constant(const Field1D&, double, double, double);
  ConstantConjugacy(std::shared_ptr<const detail::CumulativeIntegral> g, double lo, double hi,
                    double shift);

  std::shared_ptr<const detail::CumulativeIntegral> g_;
  double lo_, hi_;
  double shift_;  // integral from lo to origin
  bool increasing_;
};

/// Throws DivergentIntegral when X vanishes or changes sign on [lo, hi].
ConstantConjugacy conjugate_to_constant(const Field1D& x, double lo, double hi,
                                        double origin = 0.0);

/// s: R -> (0, 1], equal to 1 outside [tau_minus, tau_plus].
class SlowdownProfile {
 public:
  /// Validates range and floor on a sample grid; throws std::invalid_argument.
  SlowdownProfile(ScalarFn s, double tau_minus, double tau_plus, double floor,
                  std::string description);

  /// floor on [lo + ramp, hi - ramp], 1 outside [lo, hi], C2 quintic ramps.
  static SlowdownProfile window(double lo, double hi, double floor, double ramp);
  static SlowdownProfile identity();

  double operator()(double u) const;
  double tau_minus() const { return tau_minus_; }
  double tau_plus() const { return tau_plus_; }
  double floor() const { return floor_; }
  const std::string& description() const { return description_; }

 private:
  ScalarFn s_;
  double tau_minus_, tau_plus_, floor_;
  std::string description_;
};

/// s: R -> [0, 1], equal to 1 outside [tau_minus, tau_plus], vanishing on
/// the recorded zero set.
class StoppingProfile {
 public:
  static StoppingProfile window(double lo, double hi, double ramp);

  double operator()(double u) const;
  double tau_minus() const { return lo_; }
  double tau_plus() const { return hi_; }
  std::pair<double, double> zero_set() const { return {lo_ + ramp_, hi_ - ramp_}; }

  /// eps + (1 - eps) s: the slowdown with floor eps, eps in (0, 1].
  SlowdownProfile relaxed(double eps) const;

 private:
  StoppingProfile(double lo, double hi, double ramp) : lo_(lo), hi_(hi), ramp_(ramp) {}
  double lo_, hi_, ramp_;
};

/// f with f_* 1 = s, normalised by g(0) = 0 where g = f^{-1}.
class SlowdownConjugacy {
 public:
  double f(double x) const;
  double f_inverse(double y) const;

  /// f(x) - x equals t_minus for x <= tail_lo() and t_plus for x >= tail_hi().
  double t_minus() const { return t_minus_; }
  double t_plus() const { return t_plus_; }
  double tail_lo() const { return tau_minus_ - t_minus_; }
  double tail_hi() const { return tau_plus_ - t_plus_; }

 private:
  friend SlowdownConjugacy slowdown_conjugacy_1d(const SlowdownProfile& s);
  SlowdownConjugacy() = default;

  double g(double y) const;

  std::shared_ptr<const detail::CumulativeIntegral> excess_;  // int (1/s - 1)
  double tau_minus_ = 0, tau_plus_ = 0;
  double t_minus_ = 0, t_plus_ = 0;
};

SlowdownConjugacy slowdown_conjugacy_1d(const SlowdownProfile& s);

/// Always throws DivergentIntegral: int du / s is infinite across the zero set.
[[noreturn]] void slowdown_conjugacy_1d(const StoppingProfile& s);

/// Chart t -> phi_X^t(c0) of the orbit through c0 (a Conley point of the line).
class LineChart {
 public:
  /// Chart defined for points in [lo, hi]; X must not vanish there.
  LineChart(const Field1D& x, double c0, double lo, double hi);

  double psi(double t) const { return g_.inverse(t); }
  double psi_inverse(double x) const { return g_(x); }
  double lo() const { return g_.lo(); }
  double hi() const { return g_.hi(); }

 private:
  ConstantConjugacy g_;
};

struct ConjugacyReport {
  double sup_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  double worst_point = 0.0;
  double worst_time = 0.0;
  std::int64_t checks = 0;
};

using Map1D = std::function<double(double)>;

/// sup over grid and t in {1/4, 1/2, 1} of |h(phi_X^t(x)) - phi_Y^t(h(x))|.
ConjugacyReport verify_conjugacy(const Field1D& x, const Field1D& y, const Map1D& h,
                                 const std::vector<double>& grid, double step, double tol);

/// The slowdown conjugacy of X = 1 checked against the field s, on an even
/// grid over [tau_minus - 2, tau_plus + 2].
ConjugacyReport verify_slowdown(const SlowdownProfile& s, double step, double tol,
                                int grid_points = 201);

}  // namespace rotwidth::flow
