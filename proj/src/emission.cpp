#include "csemit/emission.hpp"

#include <cmath>
#include <sstream>

namespace csemit {

double arg_neg(Complex f) {
  if (f == Complex{0.0, 0.0}) {
    throw Error(ErrorCode::zero_argument,
                "arg(-f) undefined for zero frequency");
  }
  return std::arg(f) - kPi;
}

double partial_rate(Complex Z, Complex f, double c_light, double cutoff_sq) {
  if (Z == Complex{0.0, 0.0} || f == Complex{0.0, 0.0}) return 0.0;
  const double log_term = std::log(std::abs(f) / cutoff_sq);
  return -(Z.imag() * log_term + Z.real() * arg_neg(f)) /
         (2.0 * kPi * c_light);
}

double partial_shift(Complex Z, Complex f, double c_light, double cutoff_sq) {
  if (Z == Complex{0.0, 0.0} || f == Complex{0.0, 0.0}) return 0.0;
  const double log_term = std::log(std::abs(f) / cutoff_sq);
  return (Z.real() * log_term - Z.imag() * arg_neg(f)) /
         (4.0 * kPi * c_light);
}

namespace {

void require_exposed(const EigenState& state, const Spectrum& spectrum,
                     const UnitSystem& units) {
  if (state.kind != StateKind::resonance) return;
  const double gamma = state.energy.gamma();
  // theta > arctan(Gamma / 2 hbar omega) / 2 keeps the pole above the
  // rotated photonic continuum.
  const double threshold = 0.5 * std::atan2(gamma, 2.0 * state.energy.re);
  if (spectrum.theta.value() <= threshold) {
    std::ostringstream msg;
    msg << "theta = " << spectrum.theta.value()
        << " does not expose resonance " << state.index
        << " (needs theta > " << threshold << ")";
    throw Error(ErrorCode::theta_too_small, msg.str());
  }
}

}  // namespace

DecayBreakdown total_rate(int n, const Spectrum& spectrum,
                          const TransitionTable& table,
                          const UnitSystem& units,
                          std::optional<double> cutoff_sq) {
  const EigenState& initial = spectrum.discrete_state(n);
  require_exposed(initial, spectrum, units);
  const double cutoff = cutoff_sq.value_or(units.compton_cutoff());

  DecayBreakdown breakdown;
  breakdown.initial_index = n;
  breakdown.partials.reserve(static_cast<std::size_t>(spectrum.size()));
  for (int m = 0; m < spectrum.size(); ++m) {
    const EigenState& fin = spectrum.states[static_cast<std::size_t>(m)];
    RatePartial partial{m, fin.kind, 0.0};
    if (m != n) {
      partial.dgamma =
          partial_rate(table.Z(n, m), table.f(n, m), units.c_light, cutoff);
      if (fin.kind == StateKind::continuum) {
        breakdown.continuum_sum += partial.dgamma;
      } else {
        breakdown.discrete_sum += partial.dgamma;
      }
    }
    breakdown.partials.push_back(partial);
  }
  breakdown.total = breakdown.discrete_sum + breakdown.continuum_sum;

  double running = 0.0;
  int finals = 0;
  for (int m = 0; m < spectrum.n_discrete(); ++m) {
    if (m == n) continue;
    running += breakdown.partials[static_cast<std::size_t>(m)].dgamma;
    ++finals;
    CumulativePoint point;
    point.finals_included = finals;
    point.rate = running;
    point.fraction = breakdown.total != 0.0 ? running / breakdown.total : 0.0;
    breakdown.cumulative.push_back(point);
  }
  return breakdown;
}

ShiftBreakdown total_shift(int n, const Spectrum& spectrum,
                           const TransitionTable& table,
                           const UnitSystem& units,
                           std::optional<double> cutoff_sq) {
  const EigenState& initial = spectrum.discrete_state(n);
  require_exposed(initial, spectrum, units);
  const double cutoff = cutoff_sq.value_or(units.compton_cutoff());

  ShiftBreakdown breakdown;
  breakdown.initial_index = n;
  breakdown.cutoff_sq = cutoff;
  breakdown.partials.reserve(static_cast<std::size_t>(spectrum.size()));
  for (int m = 0; m < spectrum.size(); ++m) {
    ShiftPartial partial{m, 0.0};
    if (m != n) {
      partial.contribution =
          partial_shift(table.Z(n, m), table.f(n, m), units.c_light, cutoff);
      breakdown.total += partial.contribution;
    }
    breakdown.partials.push_back(partial);
  }
  return breakdown;
}

double hermitian_rate(int n, const Spectrum& spectrum,
                      const TransitionTable& table, const UnitSystem& units) {
  if (spectrum.theta.value() != 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "hermitian_rate requires a theta = 0 spectrum");
  }
  if (n < 0 || n >= spectrum.size() ||
      spectrum.states[static_cast<std::size_t>(n)].kind != StateKind::bound) {
    throw Error(ErrorCode::state_not_bound,
                "hermitian_rate requires a bound initial state");
  }
  double rate = 0.0;
  for (int m = 0; m < n; ++m) {
    const EigenState& fin = spectrum.states[static_cast<std::size_t>(m)];
    if (fin.kind != StateKind::bound) continue;
    const double omega =
        (spectrum.states[static_cast<std::size_t>(n)].energy.re - fin.energy.re) /
        units.hbar;
    rate += omega * std::norm(table.d(n, m)) / (2.0 * units.c_light);
  }
  return rate;
}

}  // namespace csemit
