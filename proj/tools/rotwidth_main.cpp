// rotwidth: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotwidth/finegraph/bounds.hpp"
#include "rotwidth/finegraph/chain_bound.hpp"
#include "rotwidth/flow/conjugacy.hpp"
#include "rotwidth/flow/experiment.hpp"
#include "rotwidth/lattice/geometry.hpp"
#include "rotwidth/lattice/polygon_io.hpp"
#include "rotwidth/lattice/random_polygon.hpp"
#include "rotwidth/planar.hpp"
#include "rotwidth/svg.hpp"
#include "rotwidth/torus/map_parser.hpp"
#include "rotwidth/torus/rotation_set.hpp"

namespace {

using namespace rotwidth;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool no_meta = false;
};

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Shortest round-trip form, e.g. 0.5 or 4.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void header(const Globals& g, const std::string& command,
            const std::vector<std::pair<std::string, std::string>>& params) {
  std::cout << "# rotwidth " << ROTWIDTH_VERSION << " command=" << command << " seed=" << g.seed;
  for (const auto& [k, v] : params) std::cout << ' ' << k << '=' << v;
  std::cout << '\n';
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("generated ") + buf;
}

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw InputError("cannot read file '" + path + "'");
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

torus::MapExpr map_arg(const std::string& text) {
  try {
    return torus::parse_map_expr(text);
  } catch (const torus::MapParseError& e) {
    throw InputError(std::string("map parse error: ") + e.what() + "\n" +
                     torus::caret_diagnostic(text, e));
  }
}

std::vector<double> list_arg(const std::string& name, const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--" + name + ": not a number list: '" + text + "'");
    }
  }
  return out;
}

std::string point_str(const Vec2& p) { return "(" + shortest(p.x) + ", " + shortest(p.y) + ")"; }

void print_hull(const std::string& name, const lattice::ConvexPolygonQ& c) {
  std::cout << name << " (" << c.size() << " vertices):";
  for (const Vec2& v : to_vec2(c)) std::cout << ' ' << point_str(v);
  std::cout << '\n';
}

// ---------------------------------------------------------------- ew

struct EwArgs {
  std::string polygon;
  std::int64_t oracle_radius = -1;
};

int cmd_ew(const Globals& g, const EwArgs& a) {
  require_file(a.polygon);
  lattice::ConvexPolygonQ c;
  try {
    c = lattice::read_polygon_file(a.polygon);
  } catch (const lattice::PolygonParseError& e) {
    throw InputError(a.polygon + ": " + e.what());
  }
  header(g, "ew", {{"polygon", a.polygon}, {"oracle_radius", std::to_string(a.oracle_radius)}});
  const auto ew = lattice::essential_width_with_direction(c);
  std::cout << "EW = " << ew.width << '\n';
  std::cout << "direction = (" << ew.direction.a() << ", " << ew.direction.b() << ")\n";
  const auto interior = lattice::interior_lattice_points(c);
  std::cout << "interior_lattice_points =";
  for (const auto& p : interior) std::cout << " (" << p.x << ", " << p.y << ")";
  std::cout << '\n';
  const auto verdict = lattice::check_compare_width(c);
  std::cout << "three_nonaligned_interior = " << (verdict.has3 ? "yes" : "no") << '\n';
  if (a.oracle_radius >= 0) {
    const Rational o = lattice::ew_oracle(c, a.oracle_radius);
    const std::int64_t needed = lattice::enumeration_radius(c);
    const bool complete = a.oracle_radius >= needed;
    const bool ok = o == ew.width || (o > ew.width && !complete);
    std::cout << "oracle(radius " << a.oracle_radius << ") = " << o
              << (complete ? " [complete]" : " [partial, radius " + std::to_string(needed) +
                                                 " needed]")
              << (ok ? " ok" : " MISMATCH") << '\n';
    if (!ok) return kFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::int64_t count = 10000;
  std::int64_t bound = 3;
  std::int64_t max_den = 6;
};

// Random search for large EW among polygons without three non-aligned
// interior lattice points. Reports what it finds; proves nothing.
int cmd_search(const Globals& g, const SearchArgs& a) {
  if (a.count < 1 || a.bound < 1 || a.max_den < 1) {
    throw InputError("search: --count, --bound and --max-den must be positive");
  }
  header(g, "search", {{"count", std::to_string(a.count)}, {"bound", std::to_string(a.bound)},
                       {"max_den", std::to_string(a.max_den)}});
  std::mt19937_64 rng(g.seed);
  lattice::RandomPolygonOptions opts;
  opts.bound = a.bound;
  opts.max_denominator = a.max_den;
  std::int64_t admissible = 0;
  Rational best(0);
  lattice::ConvexPolygonQ best_poly;
  for (std::int64_t i = 0; i < a.count; ++i) {
    const auto c = lattice::random_polygon(rng, opts);
    if (lattice::has_three_nonaligned_interior(c)) continue;
    ++admissible;
    const Rational w = lattice::essential_width(c);
    if (admissible == 1 || w > best) {
      best = w;
      best_poly = c;
    }
  }
  std::cout << "admissible = " << admissible << " of " << a.count << '\n';
  if (admissible == 0) return kOk;
  std::cout << "max_EW = " << best << '\n';
  std::cout << "polygon =";
  for (const auto& v : best_poly.vertices()) std::cout << " (" << v.x << ", " << v.y << ")";
  std::cout << '\n';
  return kOk;
}

// ---------------------------------------------------------------- rotset

struct RotsetArgs {
  std::string expr;
  int grid = 64;
  std::int64_t iters = 1000;
  std::string scheme = "grid";
  unsigned threads = 0;
  std::string svg, inner, outer;
  std::int64_t expect_box = -1;
  double box_tol = -1.0;
};

void rotset_svg(const Globals& g, const RotsetArgs& a, const torus::RotationSetEstimate& est) {
  std::vector<Vec2> all = to_vec2(est.outer_hull);
  if (a.expect_box >= 0) {
    all.push_back({0.0, 0.0});
    all.push_back({static_cast<double>(a.expect_box), static_cast<double>(a.expect_box)});
  }
  double x0 = all[0].x, x1 = x0, y0 = all[0].y, y1 = y0;
  for (const Vec2& p : all) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  const double pad = 0.1 * std::max({x1 - x0, y1 - y0, 1.0});
  SvgPlot plot(x0 - pad, x1 + pad, y0 - pad, y1 + pad);
  plot.polygon(to_vec2(est.outer_hull), "#888888");
  plot.polygon(to_vec2(est.inner_hull), "#1f5fa8", "#c6d9f0");
  if (a.expect_box >= 0) plot.polygon(to_vec2(box(0, a.expect_box)), "#b22222", "none", true);
  plot.label({x0 - pad * 0.8, y1 + pad * 0.5}, a.expr);
  if (!g.no_meta) plot.set_meta(timestamp());
  plot.write(a.svg);
}

int cmd_rotset(const Globals& g, const RotsetArgs& a) {
  const torus::MapExpr e = map_arg(a.expr);
  if (a.scheme != "grid" && a.scheme != "quasi") throw InputError("--scheme must be grid or quasi");
  torus::RotationSetOptions o;
  o.grid = a.grid;
  o.iterates = a.iters;
  o.scheme = a.scheme == "grid" ? torus::SamplingScheme::kUniformGrid
                                : torus::SamplingScheme::kQuasiRandom;
  o.seed = g.seed;
  o.threads = a.threads;
  header(g, "rotset",
         {{"map", "\"" + e.str() + "\""}, {"grid", std::to_string(a.grid)},
          {"iters", std::to_string(a.iters)}, {"scheme", a.scheme}});
  torus::RotationSetEstimate est;
  try {
    est = torus::rotation_set_estimate(e, o);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  std::cout << "samples = " << est.samples << ", converged = " << est.converged << '\n';
  std::cout << "max_tail_spread = " << sci(est.max_spread) << ", step_bound = "
            << fixed(est.step_bound) << '\n';
  print_hull("inner_hull", est.inner_hull);
  print_hull("outer_hull", est.outer_hull);
  std::cout << "certified = no\n";
  if (!a.inner.empty()) lattice::write_polygon_file(a.inner, est.inner_hull);
  if (!a.outer.empty()) lattice::write_polygon_file(a.outer, est.outer_hull);
  if (!a.svg.empty()) rotset_svg(g, a, est);
  if (a.expect_box >= 0) {
    const double d = hausdorff_distance(est.inner_hull, box(0, a.expect_box));
    const double tol = a.box_tol >= 0 ? a.box_tol : 0.05 * std::max<std::int64_t>(a.expect_box, 1);
    const bool ok = d <= tol;
    std::cout << "hausdorff_to_box(" << a.expect_box << ") = " << fixed(d) << " tol " << fixed(tol)
              << (ok ? " PASS" : " FAIL") << '\n';
    if (!ok) return kFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- roots

struct RootsArgs {
  std::string ew, length_upper, out;
};

int cmd_roots(const Globals& g, const RootsArgs& a) {
  const Rational ew = rational_arg("ew", a.ew);
  const Rational len = rational_arg("length-upper", a.length_upper);
  if (ew.sign() <= 0) throw InputError("--ew must be positive");
  if (len.sign() < 0) throw InputError("--length-upper must be non-negative");
  header(g, "roots", {{"ew", ew.str()}, {"length_upper", len.str()}});
  const auto cert = finegraph::certify_no_roots(ew, len);
  const std::string text = finegraph::format_certificate(cert);
  std::cout << text;
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot write " + a.out);
    out << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::int64_t count = 1000;
  std::int64_t n = 64;
  std::string profile;
  std::string expr = "V H";
  std::int64_t k = 3;
  int grid = 64;
  std::int64_t iters = 500;
  double tol = 0.3;
  std::string floors = "0.5,0.25,0.1,0.05,0.02";
  double step = 1e-3;
};

int verify_compare_width(const Globals& g, const VerifyArgs& a) {
  if (a.count < 1) throw InputError("--count must be >= 1");
  header(g, "verify", {{"suite", "compare-width"}, {"count", std::to_string(a.count)}});
  std::mt19937_64 rng(g.seed);
  std::int64_t pass = 0, shown = 0;
  for (std::int64_t i = 0; i < a.count; ++i) {
    const auto c = lattice::random_polygon(rng);
    const auto v = lattice::check_compare_width(c);
    if (v.ok()) {
      ++pass;
    } else if (shown++ < 10) {
      std::cout << "violation #" << i << ": EW = " << v.ew << ", three interior points "
                << (v.has3 ? "yes" : "no") << '\n';
    }
  }
  std::cout << "compare-width: " << pass << "/" << a.count << " pass\n";
  return pass == a.count ? kOk : kFailed;
}

int verify_vnhn(const Globals& g, const VerifyArgs& a) {
  if (a.n < 1) throw InputError("--n must be >= 1");
  torus::Profile profile = torus::Profile::sin_sq();
  if (!a.profile.empty()) {
    require_file(a.profile);
    try {
      profile = torus::Profile::load_piecewise_linear(a.profile);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  header(g, "verify", {{"suite", "vnhn"}, {"n", std::to_string(a.n)}, {"profile", profile.describe()}});
  bool ok = true;
  for (std::int64_t n = 1; n <= a.n; ++n) {
    try {
      const auto rep = finegraph::chain_bound_vnhn(n, profile);
      std::cout << "n=" << n << " crossings=" << rep.crossing_count << " bound=" << rep.bound.value
                << " fix_residual_ulp=" << rep.fix_residual << '\n';
      ok = ok && rep.crossing_count == 1;
    } catch (const finegraph::ChainVerificationError& e) {
      std::cout << "n=" << n << " FAIL " << e.what() << '\n';
      ok = false;
    }
  }
  // The four fixed points of v^n h^n and their one-step displacements.
  const torus::MapExpr f = torus::MapExpr::vn_hn(a.n, profile);
  const double n = static_cast<double>(a.n);
  const std::vector<std::pair<Vec2, Vec2>> fixed_points = {
      {{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.5}, {n, 0.0}}, {{0.5, 0.0}, {0.0, n}}, {{0.5, 0.5}, {n, n}}};
  for (const auto& [p, d] : fixed_points) {
    const Vec2 q = f(p) - p;
    const bool exact = q == d;
    ok = ok && exact;
    std::cout << "displacement" << point_str(p) << " = " << point_str(q)
              << (exact ? " exact" : " MISMATCH") << '\n';
  }
  std::cout << "chain bound |f_n| <= 2 for n = 1.." << a.n << ": " << (ok ? "verified" : "FAILED")
            << '\n';
  return ok ? kOk : kFailed;
}

int verify_power_scaling(const Globals& g, const VerifyArgs& a) {
  const torus::MapExpr e = map_arg(a.expr);
  if (a.k < 1) throw InputError("--k must be >= 1");
  header(g, "verify", {{"suite", "power-scaling"}, {"map", "\"" + e.str() + "\""},
                       {"k", std::to_string(a.k)}, {"grid", std::to_string(a.grid)},
                       {"iters", std::to_string(a.iters)}});
  torus::RotationSetOptions o;
  o.grid = a.grid;
  o.iterates = a.iters;
  o.seed = g.seed;
  const auto rep = torus::power_scaling_check(e, a.k, o);
  print_hull("estimate(f^k)", rep.power.inner_hull);
  print_hull("k * estimate(f)", rep.scaled_base);
  const bool ok = rep.distance <= a.tol;
  std::cout << "hausdorff = " << fixed(rep.distance) << " tol " << fixed(a.tol)
            << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kOk : kFailed;
}

int verify_flow(const Globals& g, const VerifyArgs& a) {
  flow::ExperimentConfig cfg;
  cfg.floors = list_arg("floors", a.floors);
  cfg.step = a.step;
  header(g, "verify", {{"suite", "flow"}, {"floors", a.floors}, {"step", sci(a.step)}});
  const auto s = flow::SlowdownProfile::window(0.0, 1.0, 0.5, 0.05);
  const auto conj = flow::verify_slowdown(s, a.step, 1e-4);
  std::cout << "slow-zone conjugacy residual = " << sci(conj.sup_residual)
            << (conj.pass ? " PASS" : " FAIL") << '\n';
  const auto f = flow::slowdown_conjugacy_1d(s);
  double tail = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double lo = s.tau_minus() - 1.0 - i * 0.05, hi = s.tau_plus() + 1.0 + i * 0.05;
    tail = std::max(tail, std::fabs(f.f(lo) - lo - f.t_minus()));
    tail = std::max(tail, std::fabs(f.f(hi) - hi - f.t_plus()));
  }
  const bool tail_ok = tail < 1e-8;
  std::cout << "t- = " << fixed(f.t_minus(), 9) << ", t+ = " << fixed(f.t_plus(), 9)
            << ", tail deviation = " << sci(tail) << (tail_ok ? " PASS" : " FAIL") << '\n';
  flow::ExperimentResult r;
  try {
    r = flow::stopping_limit_experiment(cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::cout << flow::to_csv(r, !g.no_meta);
  std::cout << "series " << (r.weakly_decreasing ? "weakly decreasing PASS" : "not decreasing FAIL")
            << '\n';
  std::cout << "final distance = " << sci(r.final_distance) << " (target 1e-2 "
            << (r.final_distance < 1e-2 ? "met" : "not met") << ")\n";
  return conj.pass && tail_ok && r.weakly_decreasing ? kOk : kFailed;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  if (a.suite == "compare-width") return verify_compare_width(g, a);
  if (a.suite == "vnhn") return verify_vnhn(g, a);
  if (a.suite == "power-scaling") return verify_power_scaling(g, a);
  if (a.suite == "flow") return verify_flow(g, a);
  throw InputError("unknown suite '" + a.suite + "'");
}

// ---------------------------------------------------------------- flow

struct FlowArgs {
  std::string config;
  std::string setting;
  std::string floors;
  std::string csv, svg;
};

int cmd_flow(const Globals& g, const FlowArgs& a) {
  flow::ExperimentConfig cfg;
  try {
    if (!a.config.empty()) {
      require_file(a.config);
      std::ifstream in(a.config);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = flow::parse_experiment_config(buf.str());
    }
    if (!a.setting.empty()) {
      cfg = flow::parse_experiment_config(flow::format_experiment_config(cfg) +
                                          "setting = " + a.setting + "\n");
    }
    if (!a.floors.empty()) cfg.floors = list_arg("floors", a.floors);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  header(g, "flow", {{"config", a.config.empty() ? "-" : a.config}});
  std::istringstream echo(flow::format_experiment_config(cfg));
  for (std::string line; std::getline(echo, line);) std::cout << "# " << line << '\n';
  flow::ExperimentResult r;
  try {
    r = flow::stopping_limit_experiment(cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::string csv = flow::to_csv(r, !g.no_meta);
  std::cout << csv;
  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw InputError("cannot write " + a.csv);
    out << csv;
  }
  if (!a.svg.empty()) {
    std::vector<Vec2> pts;
    double top = 0.0;
    for (const auto& row : r.rows) {
      pts.push_back({row.floor, row.sup_distance});
      top = std::max(top, row.sup_distance);
    }
    SvgPlot plot(0.0, 1.05 * cfg.floors.front(), 0.0, 1.1 * std::max(top, 1e-12));
    plot.polyline(pts, "#1f5fa8");
    plot.points(pts, "#1f5fa8", 3.0);
    if (!g.no_meta) plot.set_meta(timestamp());
    plot.write(a.svg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential width, torus rotation sets, translation-length bounds and flow "
               "experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ROTWIDTH_VERSION));
  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampling and random suites")->capture_default_str();
  app.add_flag("--no-meta", g.no_meta, "Omit timestamps and wall-clock columns");

  EwArgs ew;
  auto* ew_cmd = app.add_subcommand("ew", "Exact essential width of a polygon file");
  ew_cmd->add_option("polygon", ew.polygon, "File with one 'x y' vertex per line")->required();
  ew_cmd->add_option("--oracle-radius", ew.oracle_radius, "Cross-check by brute force");

  SearchArgs se;
  auto* se_cmd = app.add_subcommand(
      "search", "Largest EW found among random polygons without three non-aligned interior points");
  se_cmd->add_option("--count", se.count)->capture_default_str();
  se_cmd->add_option("--bound", se.bound, "Coordinates in [-bound, bound]")->capture_default_str();
  se_cmd->add_option("--max-den", se.max_den)->capture_default_str();

  RotsetArgs rs;
  auto* rs_cmd = app.add_subcommand("rotset", "Estimate the rotation set of a map expression");
  rs_cmd->add_option("expr", rs.expr, "Map expression, e.g. \"V^2 H^2\"")->required();
  rs_cmd->add_option("--grid", rs.grid)->capture_default_str();
  rs_cmd->add_option("--iters", rs.iters)->capture_default_str();
  rs_cmd->add_option("--scheme", rs.scheme, "grid or quasi")->capture_default_str();
  rs_cmd->add_option("--threads", rs.threads, "0 = hardware concurrency");
  rs_cmd->add_option("--svg", rs.svg);
  rs_cmd->add_option("--inner", rs.inner, "Write the inner hull as a polygon file");
  rs_cmd->add_option("--outer", rs.outer, "Write the outer hull as a polygon file");
  rs_cmd->add_option("--expect-box", rs.expect_box, "Compare with [0, n]^2");
  rs_cmd->add_option("--box-tol", rs.box_tol, "Default 0.05 n");

  RootsArgs ro;
  auto* ro_cmd = app.add_subcommand("roots", "No-root certificate");
  ro_cmd->add_option("--ew", ro.ew)->required();
  ro_cmd->add_option("--length-upper", ro.length_upper)->required();
  ro_cmd->add_option("--out", ro.out);

  VerifyArgs ve;
  auto* ve_cmd = app.add_subcommand("verify", "Run a verification suite");
  ve_cmd->add_option("--suite", ve.suite, "compare-width | vnhn | power-scaling | flow")->required();
  ve_cmd->add_option("--count", ve.count)->capture_default_str();
  ve_cmd->add_option("--n", ve.n)->capture_default_str();
  ve_cmd->add_option("--profile", ve.profile, "Piecewise-linear profile file");
  ve_cmd->add_option("--expr", ve.expr)->capture_default_str();
  ve_cmd->add_option("--k", ve.k)->capture_default_str();
  ve_cmd->add_option("--grid", ve.grid)->capture_default_str();
  ve_cmd->add_option("--iters", ve.iters)->capture_default_str();
  ve_cmd->add_option("--tol", ve.tol)->capture_default_str();
  ve_cmd->add_option("--floors", ve.floors)->capture_default_str();
  ve_cmd->add_option("--step", ve.step)->capture_default_str();

  FlowArgs fl;
  auto* fl_cmd = app.add_subcommand("flow", "Stopping-limit experiment");
  fl_cmd->add_option("--config", fl.config, "key=value experiment file");
  fl_cmd->add_option("--setting", fl.setting, "line or annulus");
  fl_cmd->add_option("--floors", fl.floors, "Comma-separated, non-increasing");
  fl_cmd->add_option("--csv", fl.csv);
  fl_cmd->add_option("--svg", fl.svg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*ew_cmd) return cmd_ew(g, ew);
    if (*se_cmd) return cmd_search(g, se);
    if (*rs_cmd) return cmd_rotset(g, rs);
    if (*ro_cmd) return cmd_roots(g, ro);
    if (*ve_cmd) return cmd_verify(g, ve);
    if (*fl_cmd) return cmd_flow(g, fl);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}
