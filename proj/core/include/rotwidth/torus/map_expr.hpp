#pragma once

// Lifts of torus homeomorphisms built from shears and translations.
//
//   V(x, y) = (x, y + phi(x))      H(x, y) = (x + phi(y), y)
//
// Compose({a, b}) is a o b: the rightmost factor is applied first.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rotwidth/planar.hpp"
#include "rotwidth/rational.hpp"
#include "rotwidth/torus/profile.hpp"

namespace rotwidth::torus {

class MapExpr;

struct VShear {
  Profile profile;
  std::int64_t power;
};
struct HShear {
  Profile profile;
  std::int64_t power;
};
struct Translate {
  Rational a;
  Rational b;
  double ad = 0.0;  // cached a, b as doubles
  double bd = 0.0;
};
struct Compose {
  std::vector<MapExpr> factors;  // applied right to left
};
struct Power {
  std::shared_ptr<const MapExpr> base;
  std::int64_t k;  // >= 1
};

class MapExpr {
 public:
  using Node = std::variant<VShear, HShear, Translate, Compose, Power>;

  static MapExpr v(std::int64_t power = 1, Profile p = Profile::sin_sq());
  static MapExpr h(std::int64_t power = 1, Profile p = Profile::sin_sq());
  static MapExpr translate(Rational a, Rational b);
  static MapExpr identity() { return translate(0, 0); }
  static MapExpr compose(std::vector<MapExpr> factors);
  static MapExpr power(MapExpr base, std::int64_t k);

  /// v^n o h^n and (v o h)^n.
  static MapExpr vn_hn(std::int64_t n, Profile p = Profile::sin_sq());
  static MapExpr vh_power(std::int64_t n, Profile p = Profile::sin_sq());

  const Node& node() const { return *node_; }

  /// Image of p under the lift.
  Vec2 operator()(Vec2 p) const;

  /// DSL-style rendering, e.g. "V^3 H^3" or "(V H)^2".
  std::string str() const;

 private:
  explicit MapExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

inline Vec2 eval_lift(const MapExpr& e, Vec2 p) { return e(p); }

struct DisplacementSample {
  Vec2 base;               // in [0, 1)^2
  std::int64_t iterates;   // n >= 1
  Vec2 mean_displacement;  // D(f^n)(x) / n
};

/// (f^n(x) - x) / n, accumulated step by step on torus-reduced points with
/// compensated summation. Depends on x only through x mod Z^2.
DisplacementSample displacement(const MapExpr& e, Vec2 x, std::int64_t n);

struct RotationVectorEstimate {
  Vec2 vector;          // D(f^n)(x) / n
  double tail_spread;   // diameter of {D(f^k)(x)/k : 0.9 n <= k <= n}
  double step_bound;    // max |component| of a single-step displacement
};

RotationVectorEstimate rotation_vector_estimate(const MapExpr& e, Vec2 x,
                                                std::int64_t n);

struct BoxCheck {
  bool ok = true;
  double worst_excess = 0.0;  // distance outside [0, n]^2 (0 if inside)
  Vec2 worst_point;
  std::int64_t samples = 0;
};

/// Checks that every sampled one-step displacement f(x) - x lies in
/// [0, box]^2 up to 8 units in the last place of `box`. Samples follow a
/// low-discrepancy sequence on [0, 1)^2.
BoxCheck verify_displacement_box(const MapExpr& e, double box,
                                 std::int64_t samples);

}  // namespace rotwidth::torus
