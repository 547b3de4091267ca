#include "csemit/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eigensolver.hpp"

namespace csemit {

Complex trk_sum(int n, const Spectrum& spectrum, const TransitionTable& table) {
  if (n < 0 || n >= spectrum.size()) {
    throw Error(ErrorCode::invalid_argument,
                "trk_sum state index out of range");
  }
  return table.Z.row(n).sum(); // Z[n][n] = 0, so the self term drops out
}

SumRuleReport sum_rule_report(const Spectrum& spectrum,
                              const TransitionTable& table,
                              const std::vector<int>& initial_states) {
  SumRuleReport report;
  for (int n : initial_states) {
    const Complex c_n = trk_sum(n, spectrum, table);
    report.per_initial.emplace_back(n, c_n);
    report.max_abs_error =
        std::max(report.max_abs_error, std::abs(c_n - Complex(report.reference, 0.0)));
  }
  return report;
}

ThetaScanReport theta_scan(Observable observable, int n, const Grid& grid,
                           const PotentialSpec& potential,
                           const std::vector<double>& thetas,
                           const SpectralOptions& opts,
                           const UnitSystem& units,
                           std::optional<double> cutoff_sq) {
  if (thetas.empty()) {
    throw Error(ErrorCode::invalid_argument, "theta_scan needs at least one theta");
  }
  ThetaScanReport report;
  report.observable = observable;
  report.thetas = thetas;
  for (double theta : thetas) {
    const Spectrum spectrum =
        compute_spectrum(grid, potential, ScalingAngle(theta), opts, units);
    const TransitionTable table = build_table(spectrum, units);
    const double value =
        observable == Observable::total_rate
            ? total_rate(n, spectrum, table, units, cutoff_sq).total
            : total_shift(n, spectrum, table, units, cutoff_sq).total;
    report.values.push_back(value);
  }
  double max_abs = 0.0;
  for (double v : report.values) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs > 0.0) {
    for (std::size_t i = 0; i < report.values.size(); ++i) {
      for (std::size_t j = i + 1; j < report.values.size(); ++j) {
        report.max_rel_deviation =
            std::max(report.max_rel_deviation,
                     std::abs(report.values[i] - report.values[j]) / max_abs);
      }
    }
  }
  return report;
}

HermitianReference hermitian_oracle(const PotentialSpec& potential,
                                    const Grid& grid, int n,
                                    const UnitSystem& units) {
  const int size = grid.n_points;
  Eigen::MatrixXd h = kinetic_matrix(grid, units);
  for (int i = 0; i < size; ++i) {
    const Complex v = potential(Complex(grid.points[i], 0.0));
    if (!std::isfinite(v.real())) {
      throw Error(ErrorCode::potential_not_evaluable,
                  "potential not finite on the real axis");
    }
    h(i, i) += v.real();
  }

  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;
  detail::symmetric_eigensystem(h, energies, vectors);

  if (n < 0 || n >= size || !(energies[n] < potential.continuum_threshold())) {
    std::ostringstream msg;
    msg << "oracle state " << n << " is not bound";
    throw Error(ErrorCode::state_not_bound, msg.str());
  }

  // dsyev vectors are orthonormal coefficient vectors, psi = v / sqrt(dx),
  // so dipole integrals carry no dx weight.
  const double cutoff = units.compton_cutoff();
  HermitianReference ref;
  for (int m = 0; m < size; ++m) {
    if (m == n) continue;
    double d = 0.0;
    for (int i = 0; i < size; ++i) {
      d += vectors(i, n) * grid.points[i] * vectors(i, m);
    }
    d *= units.charge;
    const double omega = (energies[n] - energies[m]) / units.hbar;
    if (m < n) ref.rate += omega * d * d / (2.0 * units.c_light);
    ref.shift += d * d * omega * std::log(std::abs(omega) / cutoff) /
                 (4.0 * kPi * units.c_light);
  }
  return ref;
}

CrossGridReport cross_discretization_check(const PotentialSpec& potential,
                                           ScalingAngle theta,
                                           const Grid& grid_a,
                                           const Grid& grid_b, int n_poles,
                                           const SpectralOptions& opts,
                                           const UnitSystem& units) {
  const Spectrum spec_a = compute_spectrum(grid_a, potential, theta, opts, units);
  const Spectrum spec_b = compute_spectrum(grid_b, potential, theta, opts, units);

  // A confining potential labels most of the basis bound; compare only the
  // lowest few levels there. Otherwise the physical bound counts must agree.
  const bool confining = !std::isfinite(potential.continuum_threshold());
  int n_bound_compare = spec_a.n_bound;
  if (confining) {
    n_bound_compare = std::min({spec_a.n_bound, spec_b.n_bound, 8});
  } else if (spec_a.n_bound != spec_b.n_bound) {
    std::ostringstream msg;
    msg << "bound-state count differs across grids: " << spec_a.n_bound
        << " vs " << spec_b.n_bound;
    throw Error(ErrorCode::pole_count_mismatch, msg.str());
  }
  if (spec_a.n_resonance < n_poles || spec_b.n_resonance < n_poles) {
    std::ostringstream msg;
    msg << "grids expose " << spec_a.n_resonance << " and "
        << spec_b.n_resonance << " resonances, need " << n_poles;
    throw Error(ErrorCode::pole_count_mismatch, msg.str());
  }

  auto longest_lived = [](const Spectrum& s, int count) {
    std::vector<Complex> poles;
    for (const EigenState& state : s.states) {
      if (state.kind == StateKind::resonance) {
        poles.push_back(state.energy.value());
      }
    }
    std::sort(poles.begin(), poles.end(), [](Complex a, Complex b) {
      return std::abs(a.imag()) < std::abs(b.imag());
    });
    poles.resize(static_cast<std::size_t>(count));
    return poles;
  };

  CrossGridReport report;
  for (int i = 0; i < n_bound_compare; ++i) {
    PoleDelta delta;
    delta.kind = StateKind::bound;
    delta.energy_a = spec_a.states[static_cast<std::size_t>(i)].energy.value();
    delta.energy_b = spec_b.states[static_cast<std::size_t>(i)].energy.value();
    delta.delta = std::abs(delta.energy_a - delta.energy_b);
    report.poles.push_back(delta);
  }
  const auto poles_a = longest_lived(spec_a, n_poles);
  const auto poles_b = longest_lived(spec_b, n_poles);
  for (int i = 0; i < n_poles; ++i) {
    PoleDelta delta;
    delta.kind = StateKind::resonance;
    delta.energy_a = poles_a[static_cast<std::size_t>(i)];
    delta.energy_b = poles_b[static_cast<std::size_t>(i)];
    delta.delta = std::abs(delta.energy_a - delta.energy_b);
    report.poles.push_back(delta);
  }
  for (const PoleDelta& delta : report.poles) {
    report.max_delta = std::max(report.max_delta, delta.delta);
  }
  return report;
}

}  // namespace csemit
