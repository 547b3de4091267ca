#include "csemit/results.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace csemit {

std::string format_full(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::separator() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ",";
    first_.back() = false;
  }
}

void JsonWriter::begin_object() {
  separator();
  out_ += "{";
  first_.push_back(true);
}

void JsonWriter::end_object() {
  out_ += "}";
  first_.pop_back();
}

void JsonWriter::begin_array() {
  separator();
  out_ += "[";
  first_.push_back(true);
}

void JsonWriter::end_array() {
  out_ += "]";
  first_.pop_back();
}

void JsonWriter::key(const std::string& name) {
  if (!first_.back()) out_ += ",";
  first_.back() = false;
  out_ += "\"" + name + "\":";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  separator();
  out_ += format_full(v);
}

void JsonWriter::value(int v) {
  separator();
  out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
  separator();
  out_ += v ? "true" : "false";
}

void JsonWriter::value(const std::string& v) {
  separator();
  out_ += "\"";
  for (char c : v) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default: out_ += c;
    }
  }
  out_ += "\"";
}

std::vector<StateRecord> state_records(const Spectrum& spectrum) {
  std::vector<StateRecord> records;
  records.reserve(spectrum.states.size());
  for (const EigenState& state : spectrum.states) {
    StateRecord record;
    record.index = state.index;
    record.re_e = state.energy.re;
    record.im_e = state.energy.im;
    record.kind = state_kind_name(state.kind);
    record.parity = parity_name(state.parity);
    records.push_back(std::move(record));
  }
  return records;
}

bool operator==(const RunResult& a, const RunResult& b) {
  auto decay_eq = [](const DecayBreakdown& x, const DecayBreakdown& y) {
    if (x.initial_index != y.initial_index || x.discrete_sum != y.discrete_sum ||
        x.continuum_sum != y.continuum_sum || x.total != y.total ||
        x.partials.size() != y.partials.size() ||
        x.cumulative.size() != y.cumulative.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.partials.size(); ++i) {
      if (x.partials[i].final_index != y.partials[i].final_index ||
          x.partials[i].kind != y.partials[i].kind ||
          x.partials[i].dgamma != y.partials[i].dgamma) {
        return false;
      }
    }
    for (std::size_t i = 0; i < x.cumulative.size(); ++i) {
      if (x.cumulative[i].finals_included != y.cumulative[i].finals_included ||
          x.cumulative[i].rate != y.cumulative[i].rate ||
          x.cumulative[i].fraction != y.cumulative[i].fraction) {
        return false;
      }
    }
    return true;
  };
  auto shift_eq = [](const ShiftBreakdown& x, const ShiftBreakdown& y) {
    if (x.initial_index != y.initial_index || x.total != y.total ||
        x.cutoff_sq != y.cutoff_sq || x.partials.size() != y.partials.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.partials.size(); ++i) {
      if (x.partials[i].final_index != y.partials[i].final_index ||
          x.partials[i].contribution != y.partials[i].contribution) {
        return false;
      }
    }
    return true;
  };
  return a.schema_version == b.schema_version && a.config_echo == b.config_echo &&
         a.theta == b.theta && a.initial_state == b.initial_state &&
         a.n_bound == b.n_bound && a.n_resonance == b.n_resonance &&
         a.states == b.states && decay_eq(a.decay, b.decay) &&
         shift_eq(a.shift, b.shift) && a.validation == b.validation &&
         a.meta_n_points == b.meta_n_points &&
         a.meta_eigensolver == b.meta_eigensolver;
}

namespace {

void write_config(JsonWriter& json,
                  const std::vector<std::pair<std::string, std::string>>& echo) {
  json.begin_object();
  for (const auto& [key, value] : echo) {
    json.key(key);
    json.value(value);
  }
  json.end_object();
}

void write_states(JsonWriter& json, const std::vector<StateRecord>& states) {
  json.begin_array();
  for (const StateRecord& state : states) {
    json.begin_object();
    json.key("index");
    json.value(state.index);
    json.key("re_E");
    json.value(state.re_e);
    json.key("im_E");
    json.value(state.im_e);
    json.key("kind");
    json.value(state.kind);
    json.key("parity");
    json.value(state.parity);
    json.end_object();
  }
  json.end_array();
}

void write_checks(JsonWriter& json, const std::vector<ValidationCheck>& checks) {
  json.begin_array();
  for (const ValidationCheck& check : checks) {
    json.begin_object();
    json.key("name");
    json.value(check.name);
    json.key("pass");
    json.value(check.passed);
    json.key("observed");
    json.value(check.observed);
    json.key("threshold");
    json.value(check.threshold);
    json.end_object();
  }
  json.end_array();
}

}  // namespace

std::string to_json(const RunResult& result) {
  JsonWriter json;
  json.begin_object();
  json.key("schema_version");
  json.value(result.schema_version);
  json.key("config");
  write_config(json, result.config_echo);
  json.key("theta");
  json.value(result.theta);
  json.key("initial_state");
  json.value(result.initial_state);
  json.key("n_bound");
  json.value(result.n_bound);
  json.key("n_resonance");
  json.value(result.n_resonance);
  json.key("states");
  write_states(json, result.states);

  json.key("decay");
  json.begin_object();
  json.key("initial_index");
  json.value(result.decay.initial_index);
  json.key("discrete_sum");
  json.value(result.decay.discrete_sum);
  json.key("continuum_sum");
  json.value(result.decay.continuum_sum);
  json.key("total");
  json.value(result.decay.total);
  json.key("partials");
  json.begin_array();
  for (const RatePartial& partial : result.decay.partials) {
    json.begin_object();
    json.key("final_index");
    json.value(partial.final_index);
    json.key("kind");
    json.value(state_kind_name(partial.kind));
    json.key("dgamma");
    json.value(partial.dgamma);
    json.end_object();
  }
  json.end_array();
  json.key("cumulative");
  json.begin_array();
  for (const CumulativePoint& point : result.decay.cumulative) {
    json.begin_object();
    json.key("finals_included");
    json.value(point.finals_included);
    json.key("rate");
    json.value(point.rate);
    json.key("fraction");
    json.value(point.fraction);
    json.end_object();
  }
  json.end_array();
  json.end_object();

  json.key("shift");
  json.begin_object();
  json.key("initial_index");
  json.value(result.shift.initial_index);
  json.key("cutoff_sq");
  json.value(result.shift.cutoff_sq);
  json.key("total");
  json.value(result.shift.total);
  json.key("partials");
  json.begin_array();
  for (const ShiftPartial& partial : result.shift.partials) {
    json.begin_object();
    json.key("final_index");
    json.value(partial.final_index);
    json.key("contribution");
    json.value(partial.contribution);
    json.end_object();
  }
  json.end_array();
  json.end_object();

  json.key("validation");
  write_checks(json, result.validation);

  json.key("meta");
  json.begin_object();
  json.key("n_points");
  json.value(result.meta_n_points);
  json.key("eigensolver");
  json.value(result.meta_eigensolver);
  json.end_object();

  json.end_object();
  std::string text = json.str();
  text += "\n";
  return text;
}

RunResult run_result_from_json(const std::string& text) {
  const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
  RunResult result;
  result.schema_version = doc.at("schema_version").get<std::string>();
  for (const auto& item : doc.at("config").items()) {
    result.config_echo.emplace_back(item.key(), item.value().get<std::string>());
  }
  result.theta = doc.at("theta").get<double>();
  result.initial_state = doc.at("initial_state").get<int>();
  result.n_bound = doc.at("n_bound").get<int>();
  result.n_resonance = doc.at("n_resonance").get<int>();
  for (const auto& item : doc.at("states")) {
    StateRecord record;
    record.index = item.at("index").get<int>();
    record.re_e = item.at("re_E").get<double>();
    record.im_e = item.at("im_E").get<double>();
    record.kind = item.at("kind").get<std::string>();
    record.parity = item.at("parity").get<std::string>();
    result.states.push_back(std::move(record));
  }
  auto kind_from = [](const std::string& name) {
    if (name == "bound") return StateKind::bound;
    if (name == "resonance") return StateKind::resonance;
    return StateKind::continuum;
  };
  const auto& decay = doc.at("decay");
  result.decay.initial_index = decay.at("initial_index").get<int>();
  result.decay.discrete_sum = decay.at("discrete_sum").get<double>();
  result.decay.continuum_sum = decay.at("continuum_sum").get<double>();
  result.decay.total = decay.at("total").get<double>();
  for (const auto& item : decay.at("partials")) {
    RatePartial partial;
    partial.final_index = item.at("final_index").get<int>();
    partial.kind = kind_from(item.at("kind").get<std::string>());
    partial.dgamma = item.at("dgamma").get<double>();
    result.decay.partials.push_back(partial);
  }
  for (const auto& item : decay.at("cumulative")) {
    CumulativePoint point;
    point.finals_included = item.at("finals_included").get<int>();
    point.rate = item.at("rate").get<double>();
    point.fraction = item.at("fraction").get<double>();
    result.decay.cumulative.push_back(point);
  }
  const auto& shift = doc.at("shift");
  result.shift.initial_index = shift.at("initial_index").get<int>();
  result.shift.cutoff_sq = shift.at("cutoff_sq").get<double>();
  result.shift.total = shift.at("total").get<double>();
  for (const auto& item : shift.at("partials")) {
    ShiftPartial partial;
    partial.final_index = item.at("final_index").get<int>();
    partial.contribution = item.at("contribution").get<double>();
    result.shift.partials.push_back(partial);
  }
  for (const auto& item : doc.at("validation")) {
    ValidationCheck check;
    check.name = item.at("name").get<std::string>();
    check.passed = item.at("pass").get<bool>();
    check.observed = item.at("observed").get<double>();
    check.threshold = item.at("threshold").get<double>();
    result.validation.push_back(std::move(check));
  }
  result.meta_n_points = doc.at("meta").at("n_points").get<int>();
  result.meta_eigensolver = doc.at("meta").at("eigensolver").get<std::string>();
  return result;
}

std::string spectrum_to_json(const RunConfig& config, const Spectrum& spectrum) {
  JsonWriter json;
  json.begin_object();
  json.key("schema_version");
  json.value("1");
  json.key("config");
  write_config(json, config.echo());
  json.key("theta");
  json.value(spectrum.theta.value());
  json.key("n_bound");
  json.value(spectrum.n_bound);
  json.key("n_resonance");
  json.value(spectrum.n_resonance);
  json.key("states");
  write_states(json, state_records(spectrum));

  // Ray descriptors: the rotated electronic continuum and one photonic ray
  // attached to each discrete state (both run at angle -2 theta).
  const double angle = -2.0 * spectrum.theta.value();
  json.key("rays");
  json.begin_object();
  json.key("electronic");
  json.begin_object();
  json.key("origin_re");
  const double threshold = std::isfinite(config.potential.continuum_threshold())
                               ? config.potential.continuum_threshold()
                               : 0.0;
  json.value(threshold);
  json.key("origin_im");
  json.value(0.0);
  json.key("angle");
  json.value(angle);
  json.end_object();
  json.key("photonic");
  json.begin_array();
  for (int n = 0; n < spectrum.n_discrete(); ++n) {
    const EigenState& state = spectrum.states[static_cast<std::size_t>(n)];
    json.begin_object();
    json.key("state_index");
    json.value(state.index);
    json.key("origin_re");
    json.value(state.energy.re);
    json.key("origin_im");
    json.value(state.energy.im);
    json.key("angle");
    json.value(angle);
    json.end_object();
  }
  json.end_array();
  json.end_object();

  json.end_object();
  return json.str() + "\n";
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::string out = "index,re_E,im_E,kind,parity\n";
  for (const EigenState& state : spectrum.states) {
    out += std::to_string(state.index);
    out += ",";
    out += format_full(state.energy.re);
    out += ",";
    out += format_full(state.energy.im);
    out += ",";
    out += state_kind_name(state.kind);
    out += ",";
    out += parity_name(state.parity);
    out += "\n";
  }
  return out;
}

std::string convergence_to_csv(const DecayBreakdown& decay) {
  std::string out = "n_states_included,cumulative_rate,cumulative_fraction\n";
  for (const CumulativePoint& point : decay.cumulative) {
    out += std::to_string(point.finals_included);
    out += ",";
    out += format_full(point.rate);
    out += ",";
    out += format_full(point.fraction);
    out += "\n";
  }
  return out;
}

std::string validation_to_json(const RunConfig& config,
                               const std::vector<ValidationCheck>& checks) {
  bool all = true;
  for (const ValidationCheck& check : checks) all = all && check.passed;
  JsonWriter json;
  json.begin_object();
  json.key("schema_version");
  json.value("1");
  json.key("config");
  write_config(json, config.echo());
  json.key("checks");
  write_checks(json, checks);
  json.key("pass");
  json.value(all);
  json.end_object();
  return json.str() + "\n";
}

std::string scan_to_json(const RunConfig& config,
                         const std::vector<ThetaScanReport>& scans) {
  JsonWriter json;
  json.begin_object();
  json.key("schema_version");
  json.value("1");
  json.key("config");
  write_config(json, config.echo());
  json.key("initial_state");
  json.value(config.initial_state);
  json.key("scans");
  json.begin_array();
  for (const ThetaScanReport& scan : scans) {
    json.begin_object();
    json.key("observable");
    json.value(scan.observable == Observable::total_rate ? "total_rate"
                                                         : "total_shift");
    json.key("thetas");
    json.begin_array();
    for (double theta : scan.thetas) json.value(theta);
    json.end_array();
    json.key("values");
    json.begin_array();
    for (double value : scan.values) json.value(value);
    json.end_array();
    json.key("max_rel_deviation");
    json.value(scan.max_rel_deviation);
    json.end_object();
  }
  json.end_array();
  json.end_object();
  return json.str() + "\n";
}

}  // namespace csemit
