#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csemit/spectral.hpp"

namespace csemit {

/// Thresholds applied by the validate command.
struct CheckThresholds {
  double trk = 1e-5;
  double theta_scan = 1e-3;
  double oracle = 1e-6;
  double cross_grid = 1e-6;
  double cutoff_independence = 1e-6;
};

/// One fully validated run description, parsed from flat "section.key =
/// value" text. All module preconditions are checked at parse time.
struct RunConfig {
  PotentialSpec potential = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);
  double x_min = -40.0;
  double x_max = 40.0;
  int n_points = 801;
  std::vector<double> thetas = {0.15};
  int initial_state = 3;
  UnitSystem units;
  std::optional<double> cutoff_sq;
  SpectralOptions spectral;
  CheckThresholds checks;
  std::string out_dir = "out";
  bool write_json = true;
  bool write_csv = true;

  Grid make_grid() const { return build_grid(x_min, x_max, n_points); }

  /// Canonical key/value echo of the effective configuration, in a fixed
  /// order, used for deterministic serialization.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Parses configuration text; throws Error(config_invalid) on unknown keys,
/// malformed values or violated preconditions.
RunConfig parse_config(const std::string& text);

/// Reads and parses a configuration file.
RunConfig load_config(const std::string& path);

}  // namespace csemit
