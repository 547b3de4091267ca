#pragma once

#include <vector>

#include <Eigen/Core>

#include "csemit/hamiltonian.hpp"

namespace csemit {

enum class StateKind { bound, resonance, continuum };
enum class Parity { even, odd, none };

const char* state_kind_name(StateKind kind) noexcept;
const char* parity_name(Parity parity) noexcept;

/// One c-normalized eigenpair of the scaled Hamiltonian. The wavefunction is
/// stored in the scaled representation on the grid, with sum(psi_i^2) dx = 1
/// (square without conjugation).
struct EigenState {
  ComplexEnergy energy;
  Eigen::VectorXcd wavefunction;
  StateKind kind = StateKind::continuum;
  Parity parity = Parity::none;
  int index = 0;
};

struct ClassifyOptions {
  double tol_bound = 1e-7;   // |Im E| below this counts as real
  double tol_ray = 0.02;     // rad, angular capture radius of the 2theta ray
  double near_origin = 1e-6; // |E| below this defaults to continuum
};

struct SpectralOptions {
  ClassifyOptions classify;
  double tol_parity = 1e-6;
  /// Demote off-ray eigenvalues that move with theta (discretized-continuum
  /// artifacts) back to the continuum by re-diagonalizing at theta + dtheta.
  bool confirm_resonances = true;
  double confirm_dtheta = 0.02;
  /// A candidate survives when |E(theta+d) - E(theta)| <
  /// confirm_drift_ratio * |E| * dtheta; genuine poles sit orders below.
  double confirm_drift_ratio = 0.5;
  /// States with |sum psi^2| below this (relative to the Hermitian norm) are
  /// self-orthogonal (coalesced pair): an error for bound states, a demotion
  /// to continuum for off-ray candidates. Physical c-normalizable states sit
  /// at O(0.01..1); a numerically coalesced pair lands near sqrt(machine eps).
  double tol_self_orthogonal = 1e-6;
};

/// Full eigensystem of one (grid, theta) pair. States are ordered with the
/// discrete block (bound + resonance, ascending Re E) first, then the
/// continuum block (ascending Re E), so that "state n" matches the usual
/// discrete-level numbering: n=0,1 bound, n=2 first resonance, ...
struct Spectrum {
  std::vector<EigenState> states;
  ScalingAngle theta;
  Grid grid;
  int n_bound = 0;
  int n_resonance = 0;

  int n_discrete() const { return n_bound + n_resonance; }
  int size() const { return static_cast<int>(states.size()); }

  /// Discrete state by discrete ordinal; throws state_not_discrete.
  const EigenState& discrete_state(int n) const;
};

/// Geometric single-eigenvalue classification relative to the continuum
/// threshold of the potential and the rotated ray arg(E) = -2 theta.
StateKind classify(Complex energy, double theta, double continuum_threshold,
                   const ClassifyOptions& opts = {});

/// Parity by mirror comparison on the symmetric grid:
/// even when sum |psi(x)-psi(-x)|^2 dx < tol, odd for the + sign, else none.
Parity parity_of(const Eigen::VectorXcd& psi, const Grid& grid,
                 double tol_parity = 1e-6);
inline Parity parity_of(const EigenState& state, const Grid& grid,
                        double tol_parity = 1e-6) {
  return parity_of(state.wavefunction, grid, tol_parity);
}

/// Dense diagonalization of H: all eigenpairs, c-normalized, sign-fixed
/// (largest-magnitude entry has positive real part), classified
/// geometrically and ordered discrete-first.
Spectrum diagonalize(const ScaledHamiltonian& hamiltonian,
                     const SpectralOptions& opts = {});

/// assemble + diagonalize + (optionally) theta-stationarity confirmation of
/// resonance labels. This is the pipeline entry point.
Spectrum compute_spectrum(const Grid& grid, const PotentialSpec& potential,
                          ScalingAngle theta, const SpectralOptions& opts = {},
                          const UnitSystem& units = {});

struct TrajectoryOptions {
  SpectralOptions spectral;
  double match_radius = 1e-4; // ambiguity radius for continuation
  double tol_stat = 1e-6;     // confirmation drift threshold (a.u.)
};

struct PoleTrajectory {
  StateKind kind = StateKind::resonance;
  std::vector<Complex> energies; // one per theta, in theta order
  double max_drift = 0.0;        // max |E(theta_{k+1}) - E(theta_k)|
  bool confirmed = false;        // max_drift < tol_stat
};

struct TrajectoryReport {
  std::vector<double> thetas;
  std::vector<PoleTrajectory> poles;
};

/// Tracks every discrete state of the largest theta back through the list by
/// nearest-neighbor continuation. Throws trajectory_ambiguity when two
/// eigenvalues fall inside the matching radius, invalid_argument for fewer
/// than three theta values or an unsorted list.
TrajectoryReport theta_trajectory(const Grid& grid,
                                  const PotentialSpec& potential,
                                  const std::vector<double>& thetas,
                                  const TrajectoryOptions& opts = {},
                                  const UnitSystem& units = {});

}  // namespace csemit
