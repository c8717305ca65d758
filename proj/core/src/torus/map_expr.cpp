#include "rotwidth/torus/map_expr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rotwidth/torus/sampling.hpp"

namespace rotwidth::torus {

MapExpr MapExpr::v(std::int64_t power, Profile p) {
  return MapExpr(VShear{std::move(p), power});
}
MapExpr MapExpr::h(std::int64_t power, Profile p) {
  return MapExpr(HShear{std::move(p), power});
}
MapExpr MapExpr::translate(Rational a, Rational b) {
  const double ad = a.to_double(), bd = b.to_double();
  return MapExpr(Translate{std::move(a), std::move(b), ad, bd});
}
MapExpr MapExpr::compose(std::vector<MapExpr> factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return factors.front();
  return MapExpr(Compose{std::move(factors)});
}
MapExpr MapExpr::power(MapExpr base, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("map power must be >= 1");
  if (k == 1) return base;
  return MapExpr(Power{std::make_shared<const MapExpr>(std::move(base)), k});
}

MapExpr MapExpr::vn_hn(std::int64_t n, Profile p) {
  return compose({v(n, p), h(n, p)});
}
MapExpr MapExpr::vh_power(std::int64_t n, Profile p) {
  return power(compose({v(1, p), h(1, p)}), n);
}

namespace {

struct Evaluator {
  Vec2 p;
  void operator()(const VShear& s) {
    p.y += static_cast<double>(s.power) * s.profile(p.x);
  }
  void operator()(const HShear& s) {
    p.x += static_cast<double>(s.power) * s.profile(p.y);
  }
  void operator()(const Translate& t) {
    p.x += t.ad;
    p.y += t.bd;
  }
  void operator()(const Compose& c) {
    for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) {
      std::visit(*this, it->node());
    }
  }
  void operator()(const Power& pw) {
    for (std::int64_t i = 0; i < pw.k; ++i) std::visit(*this, pw.base->node());
  }
};

std::string power_suffix(std::int64_t k) {
  return k == 1 ? "" : "^" + std::to_string(k);
}

// A power suffix may only follow a bare atom.
bool needs_parens(const MapExpr& e) {
  if (const auto* v = std::get_if<VShear>(&e.node())) return v->power != 1;
  if (const auto* h = std::get_if<HShear>(&e.node())) return h->power != 1;
  return !std::holds_alternative<Translate>(e.node());
}

// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

Vec2 reduce(Vec2 p) { return {p.x - std::floor(p.x), p.y - std::floor(p.y)}; }

}  // namespace

// Evaluated on the fractional part so that integer translations commute exactly.
Vec2 MapExpr::operator()(Vec2 p) const {
  const Vec2 whole{std::floor(p.x), std::floor(p.y)};
  Evaluator ev{{p.x - whole.x, p.y - whole.y}};
  std::visit(ev, *node_);
  return {ev.p.x + whole.x, ev.p.y + whole.y};
}

std::string MapExpr::str() const {
  struct Printer {
    std::string operator()(const VShear& s) const { return "V" + power_suffix(s.power); }
    std::string operator()(const HShear& s) const { return "H" + power_suffix(s.power); }
    std::string operator()(const Translate& t) const {
      return "T(" + t.a.str() + "," + t.b.str() + ")";
    }
    std::string operator()(const Compose& c) const {
      std::string s;
      for (const auto& f : c.factors) {
        if (!s.empty()) s += ' ';
        s += std::holds_alternative<Compose>(f.node()) ? "(" + f.str() + ")" : f.str();
      }
      return s;
    }
    std::string operator()(const Power& pw) const {
      const std::string b = pw.base->str();
      return (needs_parens(*pw.base) ? "(" + b + ")" : b) + power_suffix(pw.k);
    }
  };
  return std::visit(Printer{}, *node_);
}

DisplacementSample displacement(const MapExpr& e, Vec2 x, std::int64_t n) {
  const RotationVectorEstimate r = rotation_vector_estimate(e, x, n);
  return {reduce(x), n, r.vector};
}

RotationVectorEstimate rotation_vector_estimate(const MapExpr& e, Vec2 x,
                                                std::int64_t n) {
  if (n < 1) throw std::invalid_argument("iterate count must be >= 1");
  Vec2 p = reduce(x);
  CompensatedSum sx, sy;
  const std::int64_t tail_start = std::max<std::int64_t>(1, (9 * n + 9) / 10);
  double lox = INFINITY, hix = -INFINITY, loy = INFINITY, hiy = -INFINITY;
  double step_bound = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const Vec2 q = e(p);
    const Vec2 d = q - p;
    step_bound = std::max({step_bound, std::abs(d.x), std::abs(d.y)});
    sx.add(d.x);
    sy.add(d.y);
    p = reduce(q);
    if (k >= tail_start) {
      const double ax = sx.value() / static_cast<double>(k);
      const double ay = sy.value() / static_cast<double>(k);
      lox = std::min(lox, ax);
      hix = std::max(hix, ax);
      loy = std::min(loy, ay);
      hiy = std::max(hiy, ay);
    }
  }
  const double nn = static_cast<double>(n);
  return {{sx.value() / nn, sy.value() / nn},
          std::hypot(hix - lox, hiy - loy),
          step_bound};
}

BoxCheck verify_displacement_box(const MapExpr& e, double box,
                                 std::int64_t samples) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(box));
  BoxCheck out;
  out.samples = samples;
  R2Sequence seq;
  for (std::int64_t i = 0; i < samples; ++i) {
    const Vec2 p = seq.next();
    const Vec2 d = e(p) - p;
    const double ex = std::max({0.0, -d.x, d.x - box});
    const double ey = std::max({0.0, -d.y, d.y - box});
    const double excess = std::max(ex, ey);
    if (excess > out.worst_excess) {
      out.worst_excess = excess;
      out.worst_point = p;
    }
  }
  out.ok = out.worst_excess <= tol;
  return out;
}

}  // namespace rotwidth::torus
