#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csemit/emission.hpp"

namespace csemit {

/// Full-basis dipole sum rule sum_{n'} f_{nn'} d_{nn'}^2; converges to
/// -hbar/(2m) = -0.5 a.u. for every n when the basis is complete.
Complex trk_sum(int n, const Spectrum& spectrum, const TransitionTable& table);

struct SumRuleReport {
  std::vector<std::pair<int, Complex>> per_initial;
  double reference = -0.5;
  double max_abs_error = 0.0;
};

SumRuleReport sum_rule_report(const Spectrum& spectrum,
                              const TransitionTable& table,
                              const std::vector<int>& initial_states);

enum class Observable { total_rate, total_shift };

struct ThetaScanReport {
  Observable observable = Observable::total_rate;
  std::vector<double> thetas;
  std::vector<double> values;
  double max_rel_deviation = 0.0;
};

/// Recomputes the full pipeline per theta and reports the largest pairwise
/// relative deviation of the chosen observable (0 for a single theta).
ThetaScanReport theta_scan(Observable observable, int n, const Grid& grid,
                           const PotentialSpec& potential,
                           const std::vector<double>& thetas,
                           const SpectralOptions& opts = {},
                           const UnitSystem& units = {},
                           std::optional<double> cutoff_sq = std::nullopt);

struct HermitianReference {
  double rate = 0.0;
  double shift = 0.0;
};

/// Independent Hermitian check path: real symmetric diagonalization at
/// theta = 0, golden-rule rate and Bethe-regularized shift with the Compton
/// cutoff. Requires state n bound (below the continuum threshold).
HermitianReference hermitian_oracle(const PotentialSpec& potential,
                                    const Grid& grid, int n,
                                    const UnitSystem& units = {});

struct PoleDelta {
  StateKind kind = StateKind::resonance;
  Complex energy_a;
  Complex energy_b;
  double delta = 0.0;
};

struct CrossGridReport {
  std::vector<PoleDelta> poles;
  double max_delta = 0.0;
};

/// Matches bound states and the n_poles longest-lived resonances across two
/// discretizations and reports per-pole energy deltas. Throws
/// pole_count_mismatch when the grids disagree on the bound count or either
/// exposes fewer than n_poles resonances.
CrossGridReport cross_discretization_check(const PotentialSpec& potential,
                                           ScalingAngle theta,
                                           const Grid& grid_a,
                                           const Grid& grid_b, int n_poles = 3,
                                           const SpectralOptions& opts = {},
                                           const UnitSystem& units = {});

}  // namespace csemit
