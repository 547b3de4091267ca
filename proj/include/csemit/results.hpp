#pragma once

#include <string>
#include <vector>

#include "csemit/config.hpp"
#include "csemit/emission.hpp"
#include "csemit/validation.hpp"

namespace csemit {

/// Append-only JSON emitter with deterministic output: fixed key order is
/// the caller's responsibility, every floating value is printed with %.17g
/// (full round-trip precision), lines end with LF.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& name);
  void value(double v);
  void value(int v);
  void value(bool v);
  void value(const std::string& v);
  void value(const char* v) { value(std::string(v)); }

  std::string str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

std::string format_full(double v);

struct StateRecord {
  int index = 0;
  double re_e = 0.0;
  double im_e = 0.0;
  std::string kind;
  std::string parity;

  friend bool operator==(const StateRecord&, const StateRecord&) = default;
};

std::vector<StateRecord> state_records(const Spectrum& spectrum);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double threshold = 0.0;

  friend bool operator==(const ValidationCheck&,
                         const ValidationCheck&) = default;
};

/// Serializable result of one (config, theta) rates run.
struct RunResult {
  std::string schema_version = "1";
  std::vector<std::pair<std::string, std::string>> config_echo;
  double theta = 0.0;
  int initial_state = 0;
  int n_bound = 0;
  int n_resonance = 0;
  std::vector<StateRecord> states;
  DecayBreakdown decay;
  ShiftBreakdown shift;
  std::vector<ValidationCheck> validation;
  int meta_n_points = 0;
  std::string meta_eigensolver = "lapack-zgeev";
};

bool operator==(const RunResult& a, const RunResult& b);

std::string to_json(const RunResult& result);
RunResult run_result_from_json(const std::string& text);

std::string spectrum_to_json(const RunConfig& config, const Spectrum& spectrum);
std::string spectrum_to_csv(const Spectrum& spectrum);
std::string convergence_to_csv(const DecayBreakdown& decay);
std::string validation_to_json(const RunConfig& config,
                               const std::vector<ValidationCheck>& checks);
std::string scan_to_json(const RunConfig& config,
                         const std::vector<ThetaScanReport>& scans);

}  // namespace csemit
