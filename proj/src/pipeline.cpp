#include "csemit/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

namespace csemit {

namespace {

namespace fs = std::filesystem;

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)) {}
  ~Stopwatch() {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_);
    std::fprintf(stderr, "[csemit] %s: %.2f s\n", label_.c_str(),
                 elapsed.count());
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::invalid_argument,
                "cannot open output file: " + path.string());
  }
  out << content;
}

std::string suffix(std::size_t index, std::size_t count) {
  if (count <= 1) return "";
  char buf[8];
  std::snprintf(buf, sizeof(buf), "_%02zu", index);
  return buf;
}

RunResult make_run_result(const RunConfig& config, const Spectrum& spectrum,
                          const DecayBreakdown& decay,
                          const ShiftBreakdown& shift) {
  RunResult result;
  result.config_echo = config.echo();
  result.theta = spectrum.theta.value();
  result.initial_state = config.initial_state;
  result.n_bound = spectrum.n_bound;
  result.n_resonance = spectrum.n_resonance;
  result.states = state_records(spectrum);
  result.decay = decay;
  result.shift = shift;
  result.meta_n_points = spectrum.grid.n_points;
  return result;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

std::vector<double> scan_thetas(const RunConfig& config) {
  if (config.thetas.size() >= 2) return config.thetas;
  const double theta0 = config.thetas.front();
  if (theta0 <= 0.0) return config.thetas;
  const double hi = std::min(1.2 * theta0, 0.5 * (theta0 + 0.25 * kPi));
  return {0.8 * theta0, theta0, hi};
}

}  // namespace

int run_spectrum(const RunConfig& config) {
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  const Grid grid = config.make_grid();
  for (std::size_t k = 0; k < config.thetas.size(); ++k) {
    Stopwatch timer("spectrum theta=" + std::to_string(config.thetas[k]));
    const Spectrum spectrum =
        compute_spectrum(grid, config.potential, ScalingAngle(config.thetas[k]),
                         config.spectral, config.units);
    const std::string tag = suffix(k, config.thetas.size());
    if (config.write_json) {
      write_file(out_dir / ("spectrum" + tag + ".json"),
                 spectrum_to_json(config, spectrum));
    }
    if (config.write_csv) {
      write_file(out_dir / ("spectrum" + tag + ".csv"),
                 spectrum_to_csv(spectrum));
    }
  }
  return 0;
}

int run_rates(const RunConfig& config) {
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  const Grid grid = config.make_grid();

  ThetaScanReport rate_scan;
  rate_scan.observable = Observable::total_rate;
  ThetaScanReport shift_scan;
  shift_scan.observable = Observable::total_shift;

  for (std::size_t k = 0; k < config.thetas.size(); ++k) {
    Stopwatch timer("rates theta=" + std::to_string(config.thetas[k]));
    const Spectrum spectrum =
        compute_spectrum(grid, config.potential, ScalingAngle(config.thetas[k]),
                         config.spectral, config.units);
    const TransitionTable table = build_table(spectrum, config.units);
    const DecayBreakdown decay = total_rate(
        config.initial_state, spectrum, table, config.units, config.cutoff_sq);
    const ShiftBreakdown shift = total_shift(
        config.initial_state, spectrum, table, config.units, config.cutoff_sq);

    rate_scan.thetas.push_back(config.thetas[k]);
    rate_scan.values.push_back(decay.total);
    shift_scan.thetas.push_back(config.thetas[k]);
    shift_scan.values.push_back(shift.total);

    const std::string tag = suffix(k, config.thetas.size());
    if (config.write_json) {
      write_file(out_dir / ("rates" + tag + ".json"),
                 to_json(make_run_result(config, spectrum, decay, shift)));
    }
    if (config.write_csv) {
      write_file(out_dir / ("convergence" + tag + ".csv"),
                 convergence_to_csv(decay));
    }
  }

  if (config.thetas.size() > 1) {
    for (ThetaScanReport* scan : {&rate_scan, &shift_scan}) {
      double max_abs = 0.0;
      for (double v : scan->values) max_abs = std::max(max_abs, std::abs(v));
      if (max_abs > 0.0) {
        for (std::size_t i = 0; i < scan->values.size(); ++i) {
          for (std::size_t j = i + 1; j < scan->values.size(); ++j) {
            scan->max_rel_deviation = std::max(
                scan->max_rel_deviation,
                std::abs(scan->values[i] - scan->values[j]) / max_abs);
          }
        }
      }
    }
    write_file(out_dir / "scan.json",
               scan_to_json(config, {rate_scan, shift_scan}));
  }
  return 0;
}

int run_scan_theta(const RunConfig& config) {
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  const Grid grid = config.make_grid();
  Stopwatch timer("scan-theta");
  std::vector<ThetaScanReport> scans;
  scans.push_back(theta_scan(Observable::total_rate, config.initial_state,
                             grid, config.potential, config.thetas,
                             config.spectral, config.units, config.cutoff_sq));
  scans.push_back(theta_scan(Observable::total_shift, config.initial_state,
                             grid, config.potential, config.thetas,
                             config.spectral, config.units, config.cutoff_sq));
  write_file(out_dir / "scan.json", scan_to_json(config, scans));
  return 0;
}

int run_validate(const RunConfig& config) {
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  const Grid grid = config.make_grid();
  std::vector<ValidationCheck> checks;

  auto run_check = [&checks](const std::string& name, double threshold,
                             auto&& body) {
    ValidationCheck check;
    check.name = name;
    check.threshold = threshold;
    try {
      check.observed = body();
      check.passed = check.observed < threshold;
    } catch (const Error& err) {
      std::fprintf(stderr, "[csemit] check %s raised %s: %s\n", name.c_str(),
                   error_code_name(err.code()), err.what());
      check.observed = -1.0;
      check.passed = false;
    }
    checks.push_back(check);
  };

  // Unit sanity: c must exceed 1 in atomic units.
  {
    ValidationCheck check;
    check.name = "c-light-sane";
    check.threshold = 1.0;
    check.observed = config.units.c_light;
    check.passed = config.units.c_light > 1.0;
    checks.push_back(check);
  }

  const double theta0 = config.thetas.front();
  Stopwatch timer("validate");
  const Spectrum spectrum = compute_spectrum(
      grid, config.potential, ScalingAngle(theta0), config.spectral,
      config.units);
  const TransitionTable table = build_table(spectrum, config.units);

  run_check("sum-rule-trk", config.checks.trk, [&] {
    double worst = 0.0;
    for (int n = 0; n < spectrum.n_discrete(); ++n) {
      worst = std::max(worst,
                       std::abs(trk_sum(n, spectrum, table) - Complex(-0.5, 0.0)));
    }
    return worst;
  });

  run_check("theta-scan-total-rate", config.checks.theta_scan, [&] {
    return theta_scan(Observable::total_rate, config.initial_state, grid,
                      config.potential, scan_thetas(config), config.spectral,
                      config.units, config.cutoff_sq)
        .max_rel_deviation;
  });

  run_check("theta-scan-total-shift", config.checks.theta_scan, [&] {
    return theta_scan(Observable::total_shift, config.initial_state, grid,
                      config.potential, scan_thetas(config), config.spectral,
                      config.units, config.cutoff_sq)
        .max_rel_deviation;
  });

  // Hermitian oracle cross-check for a bound emitter. For a confining
  // potential the full-sum rate is only meaningful at theta = 0, so the
  // pipeline side is evaluated there.
  const bool confining =
      !std::isfinite(config.potential.continuum_threshold());
  const Spectrum* oracle_side = &spectrum;
  const TransitionTable* oracle_table = &table;
  Spectrum theta0_spectrum;
  TransitionTable theta0_table;
  if (confining && theta0 != 0.0) {
    theta0_spectrum = compute_spectrum(grid, config.potential, ScalingAngle(0.0),
                                       config.spectral, config.units);
    theta0_table = build_table(theta0_spectrum, config.units);
    oracle_side = &theta0_spectrum;
    oracle_table = &theta0_table;
  }

  run_check("hermitian-oracle-rate", config.checks.oracle, [&] {
    const int n = std::min(oracle_side->n_bound - 1, 1);
    if (n < 0) {
      throw Error(ErrorCode::state_not_bound, "no bound emitter available");
    }
    const HermitianReference ref =
        hermitian_oracle(config.potential, grid, n, config.units);
    const double pipeline =
        total_rate(n, *oracle_side, *oracle_table, config.units,
                   config.cutoff_sq)
            .total;
    return rel_diff(pipeline, ref.rate);
  });

  run_check("hermitian-oracle-shift", config.checks.oracle, [&] {
    const int n = std::min(oracle_side->n_bound - 1, 1);
    if (n < 0) {
      throw Error(ErrorCode::state_not_bound, "no bound emitter available");
    }
    const HermitianReference ref =
        hermitian_oracle(config.potential, grid, n, config.units);
    const double pipeline =
        total_shift(n, *oracle_side, *oracle_table, config.units,
                    config.cutoff_sq)
            .total;
    return rel_diff(pipeline, ref.shift);
  });

  run_check("cutoff-independence", config.checks.cutoff_independence, [&] {
    const double base = config.cutoff_sq.value_or(config.units.compton_cutoff());
    const double total_a =
        total_rate(config.initial_state, spectrum, table, config.units, base)
            .total;
    const double total_b = total_rate(config.initial_state, spectrum, table,
                                      config.units, 10.0 * base)
                               .total;
    return rel_diff(total_a, total_b);
  });

  run_check("cross-discretization", config.checks.cross_grid, [&] {
    const int refined_points = (config.n_points - 1) * 3 / 2 + 1;
    const Grid refined =
        build_grid(1.2 * config.x_min, 1.2 * config.x_max, refined_points);
    const bool confining =
        !std::isfinite(config.potential.continuum_threshold());
    const int n_poles = confining ? 0 : 3;
    return cross_discretization_check(config.potential, ScalingAngle(theta0),
                                      grid, refined, n_poles, config.spectral,
                                      config.units)
        .max_delta;
  });

  write_file(out_dir / "validate.json", validation_to_json(config, checks));

  for (const ValidationCheck& check : checks) {
    if (!check.passed) return 1;
  }
  return 0;
}

}  // namespace csemit
