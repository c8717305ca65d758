#pragma once

// Shear profiles: continuous 1-periodic maps phi: R -> [0, 1] with
// phi(0) = 0 and phi(1/2) = 1.

#include <string>
#include <vector>

#include "rotwidth/rational.hpp"

namespace rotwidth::torus {

struct Breakpoint {
  Rational t;    // in [0, 1]
  double value;  // in [0, 1]
};

class Profile {
 public:
  enum class Kind { kSinSq, kPiecewiseLinear };

  /// phi(x) = sin^2(pi x).
  static Profile sin_sq();

  /// Linear interpolation through the breakpoints, extended periodically.
  /// Breakpoints must start at t = 0, end at t = 1, include t = 1/2 with
  /// value 1, and satisfy phi(0) = phi(1) = 0. Throws std::invalid_argument.
  static Profile piecewise_linear(std::vector<Breakpoint> breakpoints);

  /// Reads "t value" lines ('#' comments allowed).
  static Profile load_piecewise_linear(const std::string& path);

  Kind kind() const { return kind_; }
  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  std::string describe() const;

  /// Exact (0 and 1) at integers and half-integers for both kinds.
  double operator()(double x) const;

 private:
  Profile() = default;

  Kind kind_ = Kind::kSinSq;
  std::vector<Breakpoint> bps_;
  std::vector<double> ts_;  // breakpoint abscissae as doubles
};

}  // namespace rotwidth::torus
