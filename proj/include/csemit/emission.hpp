#pragma once

#include <optional>
#include <vector>

#include "csemit/transition.hpp"

namespace csemit {

/// arg(-f) on the branch arg(-z) = Arg(z) - pi, with Arg the principal
/// argument; the result lies in (-2 pi, 0]. Throws zero_argument for f = 0.
double arg_neg(Complex f);

/// Partial SE decay rate of one transition channel,
///   -(1/2 pi c) [ Im(Z) log(|f|/cutoff_sq) + Re(Z) arg(-f) ],
/// with cutoff_sq the Compton frequency cutoff (c^2 in atomic units).
double partial_rate(Complex Z, Complex f, double c_light, double cutoff_sq);

/// Radiative-shift contribution of one channel,
///   (1/4 pi c) [ Re(Z) log(|f|/cutoff_sq) - Im(Z) arg(-f) ].
double partial_shift(Complex Z, Complex f, double c_light, double cutoff_sq);

struct RatePartial {
  int final_index = 0;
  StateKind kind = StateKind::continuum;
  double dgamma = 0.0;
};

/// One point of the discrete-sum convergence series: the running sum after
/// including `finals_included` discrete final states in energy order (the
/// initial state itself carries no rate and is not counted).
struct CumulativePoint {
  int finals_included = 0;
  double rate = 0.0;
  double fraction = 0.0; // rate / total
};

struct DecayBreakdown {
  int initial_index = 0;
  std::vector<RatePartial> partials; // one per final state, state order
  double discrete_sum = 0.0;
  double continuum_sum = 0.0;
  double total = 0.0; // discrete_sum + continuum_sum
  std::vector<CumulativePoint> cumulative;
};

struct ShiftPartial {
  int final_index = 0;
  double contribution = 0.0;
};

struct ShiftBreakdown {
  int initial_index = 0;
  std::vector<ShiftPartial> partials;
  double total = 0.0;
  double cutoff_sq = 0.0;
};

/// Total SE decay rate from discrete state n (discrete ordinal) as the sum
/// of partial rates into every other eigenstate; the continuum integral is
/// the quadrature sum over continuum-labeled states. For a resonance emitter
/// the scaling angle must satisfy theta > arctan(Gamma_n / 2 hbar omega_n)/2
/// (theta_too_small otherwise). cutoff_sq defaults to the Compton cutoff.
DecayBreakdown total_rate(int n, const Spectrum& spectrum,
                          const TransitionTable& table,
                          const UnitSystem& units = {},
                          std::optional<double> cutoff_sq = std::nullopt);

/// Radiative energy shift of discrete state n, summed over all final states.
ShiftBreakdown total_shift(int n, const Spectrum& spectrum,
                           const TransitionTable& table,
                           const UnitSystem& units = {},
                           std::optional<double> cutoff_sq = std::nullopt);

/// Hermitian golden-rule total rate sum_{n'<n, bound} omega |d|^2 / (2c),
/// valid for a bound state of a theta = 0 spectrum.
double hermitian_rate(int n, const Spectrum& spectrum,
                      const TransitionTable& table,
                      const UnitSystem& units = {});

}  // namespace csemit
