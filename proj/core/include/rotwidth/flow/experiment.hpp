#pragma once

// Time-1 maps of slowed-down fields compared with the time-1 map of the
// stopped field, for a decreasing sequence of slowdown floors.

#include <string>
#include <string_view>
#include <vector>

#include "rotwidth/flow/annulus.hpp"

namespace rotwidth::flow {

struct ExperimentConfig {
  enum class Setting { kLine, kAnnulus };

  Setting setting = Setting::kLine;
  double field_speed = 1.0;   // line: X = field_speed
  double window_lo = 0.0;     // stopping window, in chart time
  double window_hi = 1.0;
  double ramp = 0.1;
  std::vector<double> floors{0.5, 0.25, 0.1, 0.05, 0.02};
  double step = 1e-3;
  int grid = 101;
  // annulus setting: T_v from the model parameters, section y = section_y
  AnnulusModelParams model{};
  double section_y = -0.5;
};

/// key=value lines, '#' comments. Keys: setting (line|annulus), speed,
/// window (lo,hi), ramp, floors (comma list), step, grid, r, y0, plateau,
/// boundary, v_amplitude, section_y. Throws std::invalid_argument naming the
/// offending line.
ExperimentConfig parse_experiment_config(std::string_view text);

std::string format_experiment_config(const ExperimentConfig& c);

struct ExperimentRow {
  double floor = 0.0;
  double sup_distance = 0.0;
  double runtime_s = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  bool weakly_decreasing = false;  // after averaging neighbouring pairs
  double final_distance = 0.0;
};

/// For each floor eps, conjugates the time-1 map of X by the slowdown
/// conjugacy for eps + (1 - eps) s and records its sup distance, over the
/// grid, to the time-1 map of s X (between lifts to the strip in the
/// annulus setting). Floors must be non-increasing in (0, 1].
/// The annulus setting validates the section first and throws
/// SectionViolation when it fails.
ExperimentResult stopping_limit_experiment(const ExperimentConfig& c);

/// Columns floor,sup_distance[,runtime_s].
std::string to_csv(const ExperimentResult& r, bool include_runtime);

}  // namespace rotwidth::flow
