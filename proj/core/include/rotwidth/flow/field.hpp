#pragma once

// Vector fields on the line and on the annulus S^1 x [-1, 1], and their
// flows by fixed-step classical Runge-Kutta.

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotwidth/planar.hpp"

namespace rotwidth::flow {

using ScalarFn = std::function<double(double)>;

class Field1D {
 public:
  Field1D(ScalarFn x, std::string description, std::string smoothness = "C1");

  static Field1D constant(double c);
  /// Monotone piecewise-cubic (PCHIP) through (knots[i], values[i]); the end
  /// values are held constant outside the knot range.
  static Field1D sampled(std::vector<double> knots, std::vector<double> values);

  double operator()(double y) const { return x_(y); }
  const std::string& description() const { return description_; }
  const std::string& smoothness() const { return smoothness_; }

  /// The field s X.
  Field1D scaled(ScalarFn s, const std::string& what) const;

 private:
  ScalarFn x_;
  std::string description_;
  std::string smoothness_;
};

/// T(x, y) = (tau(y), v(y)) on S^1 x [-1, 1]; x is read modulo 1.
struct AnnulusField {
  ScalarFn tau;
  ScalarFn v;
  std::string description;

  Vec2 operator()(Vec2 p) const { return {tau(p.y), v(p.y)}; }
};

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FlowOptions {
  double step = 1e-3;
  std::int64_t max_steps = 50'000'000;
};

/// phi^t(x). Uses ceil(|t| / step) equal steps of size t / n. Throws
/// FlowError when the step count exceeds max_steps or the state blows up.
double flow(const Field1D& f, double x, double t, const FlowOptions& opts = {});

/// The x coordinate is returned unreduced (a lift to the strip R x [-1, 1]).
Vec2 flow(const AnnulusField& f, Vec2 p, double t, const FlowOptions& opts = {});

/// Distance on S^1 x [-1, 1] with x taken modulo 1.
double annulus_distance(Vec2 a, Vec2 b);

struct Richardson {
  double fine;            // result at step / 2
  double coarse;          // result at step
  double error_estimate;  // |fine - coarse| / 15, valid for a 4th order scheme
};

Richardson flow_richardson(const Field1D& f, double x, double t, double step);

}  // namespace rotwidth::flow
