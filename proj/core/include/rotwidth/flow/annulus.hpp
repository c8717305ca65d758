#pragma once

// Annulus model fields T_v(x, y) = (tau(y), v(y)) on S^1 x [-1, 1], the
// checklist for a flow with one attracting periodic orbit of period r and
// fixed boundary, transverse sections, and positively equivariant
// conjugacies between contractions of an arc.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotwidth/flow/field.hpp"

namespace rotwidth::flow {

struct AnnulusModelParams {
  double r = 1.0;             // period of the orbit at y0
  double y0 = 0.0;
  double plateau = 0.3;       // tau = 1/r on [y0 - plateau, y0 + plateau]
  double boundary = 0.1;      // tau = 0 for |y| >= 1 - boundary
  double v_amplitude = 0.05;  // v(y) = a (y0 - y)(1 - y^2)
};

/// tau with C2 ramps between the boundary zone and the plateau.
AnnulusField model_field(const AnnulusModelParams& p);

struct AnnulusCheckOptions {
  double step = 1e-3;
  double boundary_tol = 1e-12;
  double period_tol = 1e-3;
  double omega_tol = 1e-3;   // final |y - y0| for sampled orbits
  int samples = 41;
};

struct ChecklistItem {
  std::string name;
  bool pass = false;
  double measure = 0.0;
  std::string detail;
};

struct AnnulusModelReport {
  std::array<ChecklistItem, 4> items;
  bool degenerate = false;     // v vanishes identically: a circle of periodic orbits
  double period = 0.0;
  double period_error = 0.0;
  double omega_horizon = 0.0;
  double perturbation_sup = 0.0;  // time-1 distance to the field (tau, 0)
  bool all_pass() const;
};

/// Checks: (1) boundary fixed by the time-1 map; (2) the only interior
/// periodic orbit is at y0, with period r; (3) a vertical segment through y0
/// is positively invariant under phi^r; (4) sampled orbits converge to the
/// orbit at y0. Throws std::invalid_argument when tau or v violate the model
/// shape (tau = 0 near the boundary, tau = 1/r near y0, v(+-1) = 0, v > 0
/// below y0 and v < 0 above unless v is identically 0).
AnnulusModelReport annulus_model(const AnnulusField& field, double r, double y0,
                                 const AnnulusCheckOptions& opts = {});

/// A circle in the annulus chart with a side function (negative on the past
/// side, positive on the future side, zero on the circle).
struct ConleySection {
  std::function<Vec2(double)> curve;  // theta in [0, 1)
  std::function<double(Vec2)> side;
  std::string description;

  static ConleySection horizontal(double y);
};

struct SectionReport {
  double min_transversality = 0.0;  // min of <field, grad side> / |grad side|
  int max_crossings = 0;            // over sampled orbits and the horizon
  bool ok = false;
};

class SectionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transversality on samples of the circle and crossing counts of orbits
/// started on `starts` over [0, horizon].
SectionReport validate_section(const AnnulusField& field, const ConleySection& c,
                               const std::vector<Vec2>& starts, double horizon, double step,
                               double margin);

class NonAttractingFixedPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using ArcMap = std::function<double(double)>;

/// h on [-1, 1] with h o phi1 = phi2 o h, built by transporting a linear
/// identification of the fundamental domains [phi(1), 1] and [-1, phi(-1)].
class ArcConjugacy {
 public:
  double operator()(double x) const;
  double residual() const { return residual_; }  // sup of |h(phi1 x) - phi2(h x)| on a grid

 private:
  friend ArcConjugacy equivariant_arc_conjugacy(ArcMap, ArcMap, int);
  ArcConjugacy(ArcMap p1, ArcMap p2) : phi1_(std::move(p1)), phi2_(std::move(p2)) {}

  ArcMap phi1_, phi2_;
  double residual_ = 0.0;
};

/// Both maps must be increasing on [-1, 1] with 0 as unique attracting fixed
/// point (checked on a grid); throws NonAttractingFixedPoint otherwise.
ArcConjugacy equivariant_arc_conjugacy(ArcMap phi1, ArcMap phi2, int grid = 2001);

}  // namespace rotwidth::flow
