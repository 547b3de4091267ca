#include "csemit/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace csemit {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw Error(ErrorCode::config_invalid,
                "config value for '" + key + "' is not a number: " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw Error(ErrorCode::config_invalid,
                "config value for '" + key + "' is not an integer: " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::config_invalid,
              "config value for '" + key + "' is not a boolean: " + value);
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw Error(ErrorCode::config_invalid,
                  "empty element in list for '" + key + "'");
    }
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) {
    throw Error(ErrorCode::config_invalid, "empty list for '" + key + "'");
  }
  return out;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  switch (potential.kind()) {
    case PotentialSpec::Kind::gaussian_well:
      out.emplace_back("potential.kind", "gaussian-well");
      out.emplace_back("potential.a", format_value(potential.param_a()));
      out.emplace_back("potential.b", format_value(potential.param_b()));
      out.emplace_back("potential.w", format_value(potential.param_w()));
      break;
    case PotentialSpec::Kind::harmonic:
      out.emplace_back("potential.kind", "harmonic");
      out.emplace_back("potential.omega0", format_value(potential.omega0()));
      break;
  }
  out.emplace_back("grid.x_min", format_value(x_min));
  out.emplace_back("grid.x_max", format_value(x_max));
  out.emplace_back("grid.n_points", std::to_string(n_points));
  {
    std::string list;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      if (i > 0) list += ", ";
      list += format_value(thetas[i]);
    }
    out.emplace_back("scaling.theta", list);
  }
  out.emplace_back("emission.initial_state", std::to_string(initial_state));
  if (cutoff_sq) {
    out.emplace_back("emission.cutoff_sq", format_value(*cutoff_sq));
  }
  out.emplace_back("constants.c_light", format_value(units.c_light));
  out.emplace_back("output.formats", write_json && write_csv ? "json,csv"
                                     : write_json            ? "json"
                                                             : "csv");
  return out;
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::stringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::config_invalid,
                  "config line " + std::to_string(line_no) +
                      " is not of the form key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw Error(ErrorCode::config_invalid,
                  "config line " + std::to_string(line_no) +
                      " has an empty key or value");
    }
    if (!entries.emplace(key, value).second) {
      throw Error(ErrorCode::config_invalid, "duplicate config key: " + key);
    }
  }

  auto take = [&entries](const std::string& key) -> std::optional<std::string> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    std::string value = it->second;
    entries.erase(it);
    return value;
  };

  RunConfig config;

  const auto kind = take("potential.kind");
  if (!kind) {
    throw Error(ErrorCode::config_invalid,
                "missing required key potential.kind");
  }
  try {
    if (*kind == "gaussian-well") {
      const auto a = take("potential.a");
      const auto b = take("potential.b");
      const auto w = take("potential.w");
      if (!a || !b || !w) {
        throw Error(ErrorCode::config_invalid,
                    "gaussian-well needs potential.a, potential.b and "
                    "potential.w");
      }
      config.potential = PotentialSpec::gaussian_well(
          parse_double("potential.a", *a), parse_double("potential.b", *b),
          parse_double("potential.w", *w));
    } else if (*kind == "harmonic") {
      const auto omega0 = take("potential.omega0");
      if (!omega0) {
        throw Error(ErrorCode::config_invalid,
                    "harmonic needs potential.omega0");
      }
      config.potential =
          PotentialSpec::harmonic(parse_double("potential.omega0", *omega0));
    } else {
      throw Error(ErrorCode::config_invalid,
                  "unknown potential.kind: " + *kind);
    }

    if (const auto v = take("grid.x_min")) config.x_min = parse_double("grid.x_min", *v);
    if (const auto v = take("grid.x_max")) config.x_max = parse_double("grid.x_max", *v);
    if (const auto v = take("grid.n_points")) config.n_points = parse_int("grid.n_points", *v);
    if (const auto v = take("scaling.theta")) config.thetas = parse_double_list("scaling.theta", *v);
    if (const auto v = take("emission.initial_state")) config.initial_state = parse_int("emission.initial_state", *v);
    if (const auto v = take("emission.cutoff_sq")) config.cutoff_sq = parse_double("emission.cutoff_sq", *v);
    if (const auto v = take("constants.c_light")) config.units.c_light = parse_double("constants.c_light", *v);
    if (const auto v = take("tolerances.bound")) config.spectral.classify.tol_bound = parse_double("tolerances.bound", *v);
    if (const auto v = take("tolerances.ray")) config.spectral.classify.tol_ray = parse_double("tolerances.ray", *v);
    if (const auto v = take("tolerances.near_origin")) config.spectral.classify.near_origin = parse_double("tolerances.near_origin", *v);
    if (const auto v = take("tolerances.parity")) config.spectral.tol_parity = parse_double("tolerances.parity", *v);
    if (const auto v = take("tolerances.self_orthogonal")) config.spectral.tol_self_orthogonal = parse_double("tolerances.self_orthogonal", *v);
    if (const auto v = take("confirm.resonances")) config.spectral.confirm_resonances = parse_bool("confirm.resonances", *v);
    if (const auto v = take("confirm.dtheta")) config.spectral.confirm_dtheta = parse_double("confirm.dtheta", *v);
    if (const auto v = take("confirm.drift_ratio")) config.spectral.confirm_drift_ratio = parse_double("confirm.drift_ratio", *v);
    if (const auto v = take("checks.trk")) config.checks.trk = parse_double("checks.trk", *v);
    if (const auto v = take("checks.theta_scan")) config.checks.theta_scan = parse_double("checks.theta_scan", *v);
    if (const auto v = take("checks.oracle")) config.checks.oracle = parse_double("checks.oracle", *v);
    if (const auto v = take("checks.cross_grid")) config.checks.cross_grid = parse_double("checks.cross_grid", *v);
    if (const auto v = take("checks.cutoff_independence")) config.checks.cutoff_independence = parse_double("checks.cutoff_independence", *v);
    if (const auto v = take("output.dir")) config.out_dir = *v;
    if (const auto v = take("output.formats")) {
      config.write_json = false;
      config.write_csv = false;
      std::stringstream fmts(*v);
      std::string fmt;
      while (std::getline(fmts, fmt, ',')) {
        fmt = trim(fmt);
        if (fmt == "json") config.write_json = true;
        else if (fmt == "csv") config.write_csv = true;
        else {
          throw Error(ErrorCode::config_invalid,
                      "unknown output format: " + fmt);
        }
      }
      if (!config.write_json && !config.write_csv) {
        throw Error(ErrorCode::config_invalid, "output.formats is empty");
      }
    }

    if (!entries.empty()) {
      throw Error(ErrorCode::config_invalid,
                  "unknown config key: " + entries.begin()->first);
    }

    // Validate module preconditions up front.
    build_grid(config.x_min, config.x_max, config.n_points);
    for (double theta : config.thetas) (void)ScalingAngle{theta};
    if (config.initial_state < 0) {
      throw Error(ErrorCode::config_invalid,
                  "emission.initial_state must be non-negative");
    }
    if (!(config.units.c_light > 0.0)) {
      throw Error(ErrorCode::config_invalid,
                  "constants.c_light must be positive");
    }
    if (config.cutoff_sq && !(*config.cutoff_sq > 0.0)) {
      throw Error(ErrorCode::config_invalid,
                  "emission.cutoff_sq must be positive");
    }
  } catch (const Error& err) {
    if (err.code() == ErrorCode::config_invalid) throw;
    throw Error(ErrorCode::config_invalid, err.what());
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::config_invalid,
                "cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace csemit
