#include "rotwidth/torus/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rotwidth::torus {

Profile Profile::sin_sq() { return Profile(); }

Profile Profile::piecewise_linear(std::vector<Breakpoint> bps) {
  if (bps.size() < 3) {
    throw std::invalid_argument("piecewise-linear profile needs >= 3 breakpoints");
  }
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (!(bps[i - 1].t < bps[i].t)) {
      throw std::invalid_argument("profile breakpoints must be strictly increasing");
    }
  }
  if (bps.front().t != Rational(0) || bps.back().t != Rational(1)) {
    throw std::invalid_argument("profile breakpoints must span [0, 1]");
  }
  for (const auto& b : bps) {
    if (!(b.value >= 0.0 && b.value <= 1.0)) {
      throw std::invalid_argument("profile values must lie in [0, 1]");
    }
  }
  if (bps.front().value != 0.0 || bps.back().value != 0.0) {
    throw std::invalid_argument("profile must satisfy phi(0) = phi(1) = 0");
  }
  const auto half = std::find_if(bps.begin(), bps.end(), [](const Breakpoint& b) {
    return b.t == Rational(1, 2);
  });
  if (half == bps.end() || half->value != 1.0) {
    throw std::invalid_argument("profile must have a breakpoint phi(1/2) = 1");
  }
  Profile p;
  p.kind_ = Kind::kPiecewiseLinear;
  p.bps_ = std::move(bps);
  for (const auto& b : p.bps_) p.ts_.push_back(b.t.to_double());
  return p;
}

Profile Profile::load_piecewise_linear(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file " + path);
  std::vector<Breakpoint> bps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    std::string t, v;
    if (!(ss >> t)) continue;
    if (!(ss >> v)) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected 't value'");
    }
    bps.push_back({parse_rational(t), parse_rational(v).to_double()});
  }
  return piecewise_linear(std::move(bps));
}

std::string Profile::describe() const {
  if (kind_ == Kind::kSinSq) return "sin^2";
  std::string s = "pl[";
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (i) s += ' ';
    std::ostringstream v;
    v << bps_[i].value;
    s += bps_[i].t.str() + ":" + v.str();
  }
  return s + "]";
}

double Profile::operator()(double x) const {
  if (kind_ == Kind::kSinSq) {
    // Reduce to [-1/2, 1/2] first so integers give sin(0) = 0 exactly and
    // half-integers give sin(+-pi/2) = +-1 exactly.
    const double r = x - std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * r);
    return s * s;
  }
  const double t = x - std::floor(x);
  const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - ts_.begin());
  const std::size_t lo = hi - 1;
  if (t == ts_[lo] || hi >= ts_.size()) return bps_[lo].value;
  const double u = (t - ts_[lo]) / (ts_[hi] - ts_[lo]);
  return bps_[lo].value + u * (bps_[hi].value - bps_[lo].value);
}

}  // namespace rotwidth::torus
