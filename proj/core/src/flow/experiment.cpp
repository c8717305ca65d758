#include "rotwidth/flow/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "rotwidth/flow/conjugacy.hpp"

namespace rotwidth::flow {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double number(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("line " + std::to_string(line) + ": not a number: '" + s + "'");
  }
  return v;
}

std::vector<double> numbers(const std::string& s, int line) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(number(trim(item), line));
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void check_floors(const std::vector<double>& floors) {
  if (floors.empty()) throw std::invalid_argument("experiment needs at least one floor");
  for (std::size_t i = 0; i < floors.size(); ++i) {
    if (!(floors[i] > 0.0) || floors[i] > 1.0) {
      throw std::invalid_argument("floors must lie in (0, 1]");
    }
    if (i > 0 && floors[i] > floors[i - 1]) {
      throw std::invalid_argument("floors must be non-increasing");
    }
  }
}

using Clock = std::chrono::steady_clock;

template <typename Distance>
ExperimentResult run(const std::vector<double>& floors, Distance&& distance) {
  ExperimentResult res;
  for (const double eps : floors) {
    const auto t0 = Clock::now();
    const double d = distance(eps);
    const std::chrono::duration<double> dt = Clock::now() - t0;
    res.rows.push_back({eps, d, dt.count()});
  }
  res.final_distance = res.rows.back().sup_distance;
  res.weakly_decreasing = true;
  double prev = INFINITY;
  for (std::size_t i = 0; i + 1 < res.rows.size(); ++i) {
    const double m = 0.5 * (res.rows[i].sup_distance + res.rows[i + 1].sup_distance);
    if (m > prev + 1e-12 * std::max(1.0, prev)) res.weakly_decreasing = false;
    prev = m;
  }
  return res;
}

ExperimentResult line_experiment(const ExperimentConfig& c) {
  if (!(c.field_speed > 0.0)) throw std::invalid_argument("line speed must be positive");
  const StoppingProfile stop = StoppingProfile::window(c.window_lo, c.window_hi, c.ramp);
  const Field1D x = Field1D::constant(c.field_speed);
  // f and f^-1 shift chart time by at most int (1/s - 1) <= width / floor.
  const double min_floor = *std::min_element(c.floors.begin(), c.floors.end());
  const double reach = 4.0 + (c.window_hi - c.window_lo + 2.0 * c.ramp) / min_floor;
  const double t_lo = c.window_lo - reach, t_hi = c.window_hi + reach;
  const LineChart chart(x, 0.0, c.field_speed * t_lo, c.field_speed * t_hi);
  const Field1D stopped([&](double p) { return stop(chart.psi_inverse(p)) * x(p); }, "s X");

  std::vector<double> grid;
  const double g_lo = c.window_lo - 1.5, g_hi = c.window_hi + 0.5;
  for (int i = 0; i < c.grid; ++i) grid.push_back(chart.psi(g_lo + (g_hi - g_lo) * i / (c.grid - 1)));
  std::vector<double> limit;
  for (const double p : grid) limit.push_back(flow(stopped, p, 1.0, {c.step}));

  return run(c.floors, [&](double eps) {
    const SlowdownConjugacy f = slowdown_conjugacy_1d(stop.relaxed(eps));
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double pre = chart.psi(f.f_inverse(chart.psi_inverse(grid[i])));
      const double moved = flow(x, pre, 1.0, {c.step});
      const double conj = chart.psi(f.f(chart.psi_inverse(moved)));
      sup = std::max(sup, std::fabs(conj - limit[i]));
    }
    return sup;
  });
}

ExperimentResult annulus_experiment(const ExperimentConfig& c) {
  const AnnulusField t = model_field(c.model);
  const double y0 = c.model.y0, yc = c.section_y;
  if (!(yc > -1.0 && yc < y0)) throw std::invalid_argument("section must lie below y0");
  const StoppingProfile stop = StoppingProfile::window(c.window_lo, c.window_hi, c.ramp);
  // Chart time along the vertical flow: t(y) = int_yc^y du / v. It grows
  // like log near y = -1 and y = y0; 1e-4 leaves room for shifts of ~90.
  const Field1D vertical(t.v, "v");
  const ConstantConjugacy time =
      conjugate_to_constant(vertical, yc - (1 - 1e-4) * (yc + 1.0), yc + (1 - 1e-4) * (y0 - yc), yc);
  const auto chart_time = [&](double y) {
    return y < time.lo() || y > time.hi() ? NAN : time(y);
  };
  const AnnulusField stopped{
      [&](double y) {
        const double s = std::isnan(chart_time(y)) ? 1.0 : stop(chart_time(y));
        return s * t.tau(y);
      },
      [&](double y) {
        const double s = std::isnan(chart_time(y)) ? 1.0 : stop(chart_time(y));
        return s * t.v(y);
      },
      "s T_v"};

  std::vector<Vec2> grid;
  const double g_lo = c.window_lo - 1.5, g_hi = c.window_hi + 0.5;
  for (int i = 0; i < c.grid; ++i) {
    const double tt = g_lo + (g_hi - g_lo) * i / (c.grid - 1);
    grid.push_back({std::fmod(0.37 * i, 1.0), time.inverse(tt)});
  }
  const SectionReport sec =
      validate_section(t, ConleySection::horizontal(yc), grid, 2.0, c.step, 1e-9);
  if (!sec.ok) {
    throw SectionViolation("section y = " + num(yc) + " fails: transversality " +
                           num(sec.min_transversality) + ", crossings " +
                           std::to_string(sec.max_crossings));
  }
  std::vector<Vec2> limit;
  for (const Vec2& p : grid) limit.push_back(flow(stopped, p, 1.0, {c.step}));

  return run(c.floors, [&](double eps) {
    const SlowdownConjugacy f = slowdown_conjugacy_1d(stop.relaxed(eps));
    // The chart conjugacy moves a point along its own orbit by f(t) - t.
    const auto conj = [&](Vec2 p, bool inverse) {
      const double tt = time(p.y);
      const double target = inverse ? f.f_inverse(tt) : f.f(tt);
      return flow(t, p, target - tt, {c.step});
    };
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Vec2 q = conj(flow(t, conj(grid[i], true), 1.0, {c.step}), false);
      // Both are unreduced lifts of the same start; the circle metric would
      // fold angle offsets above 1/2 back down.
      sup = std::max(sup, norm(q - limit[i]));
    }
    return sup;
  });
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line) + ": expected key = value");
    }
    const std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    if (key == "setting") {
      if (value == "line") {
        c.setting = ExperimentConfig::Setting::kLine;
      } else if (value == "annulus") {
        c.setting = ExperimentConfig::Setting::kAnnulus;
      } else {
        throw std::invalid_argument("line " + std::to_string(line) + ": unknown setting '" +
                                    value + "'");
      }
    } else if (key == "speed") {
      c.field_speed = number(value, line);
    } else if (key == "window") {
      const auto w = numbers(value, line);
      if (w.size() != 2) {
        throw std::invalid_argument("line " + std::to_string(line) + ": window needs lo,hi");
      }
      c.window_lo = w[0];
      c.window_hi = w[1];
    } else if (key == "ramp") {
      c.ramp = number(value, line);
    } else if (key == "floors") {
      c.floors = numbers(value, line);
    } else if (key == "step") {
      c.step = number(value, line);
    } else if (key == "grid") {
      const double g = number(value, line);
      if (g < 2 || g != std::floor(g)) {
        throw std::invalid_argument("line " + std::to_string(line) + ": grid must be an integer >= 2");
      }
      c.grid = static_cast<int>(g);
    } else if (key == "r") {
      c.model.r = number(value, line);
    } else if (key == "y0") {
      c.model.y0 = number(value, line);
    } else if (key == "plateau") {
      c.model.plateau = number(value, line);
    } else if (key == "boundary") {
      c.model.boundary = number(value, line);
    } else if (key == "v_amplitude") {
      c.model.v_amplitude = number(value, line);
    } else if (key == "section_y") {
      c.section_y = number(value, line);
    } else {
      throw std::invalid_argument("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  check_floors(c.floors);
  return c;
}

std::string format_experiment_config(const ExperimentConfig& c) {
  std::ostringstream os;
  const bool annulus = c.setting == ExperimentConfig::Setting::kAnnulus;
  os << "setting = " << (annulus ? "annulus" : "line") << '\n';
  if (!annulus) os << "speed = " << num(c.field_speed) << '\n';
  os << "window = " << num(c.window_lo) << ',' << num(c.window_hi) << '\n';
  os << "ramp = " << num(c.ramp) << '\n';
  os << "floors = ";
  for (std::size_t i = 0; i < c.floors.size(); ++i) os << (i ? "," : "") << num(c.floors[i]);
  os << '\n' << "step = " << num(c.step) << '\n' << "grid = " << c.grid << '\n';
  if (annulus) {
    os << "r = " << num(c.model.r) << '\n'
       << "y0 = " << num(c.model.y0) << '\n'
       << "plateau = " << num(c.model.plateau) << '\n'
       << "boundary = " << num(c.model.boundary) << '\n'
       << "v_amplitude = " << num(c.model.v_amplitude) << '\n'
       << "section_y = " << num(c.section_y) << '\n';
  }
  return os.str();
}

ExperimentResult stopping_limit_experiment(const ExperimentConfig& c) {
  check_floors(c.floors);
  if (c.grid < 2 || !(c.step > 0.0)) throw std::invalid_argument("need grid >= 2 and step > 0");
  return c.setting == ExperimentConfig::Setting::kLine ? line_experiment(c)
                                                       : annulus_experiment(c);
}

std::string to_csv(const ExperimentResult& r, bool include_runtime) {
  std::ostringstream os;
  os << "floor,sup_distance" << (include_runtime ? ",runtime_s" : "") << '\n';
  for (const ExperimentRow& row : r.rows) {
    os << num(row.floor) << ',' << num(row.sup_distance);
    if (include_runtime) os << ',' << num(row.runtime_s);
    os << '\n';
  }
  return os.str();
}

}  // namespace rotwidth::flow
