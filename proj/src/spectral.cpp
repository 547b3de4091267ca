#include "csemit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "eigensolver.hpp"

namespace csemit {

namespace {

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// |sum v^2| / sum |v|^2: 1 for a real vector, ~0 at an exceptional point.
double c_norm_ratio(const Eigen::VectorXcd& v) {
  Complex s = 0.0;
  double h = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    s += v[i] * v[i];
    h += std::norm(v[i]);
  }
  return std::abs(s) / h;
}

void c_normalize(Eigen::VectorXcd& v, double dx) {
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v[i] * v[i];
  v /= std::sqrt(s * dx);
}

void fix_sign(Eigen::VectorXcd& v) {
  Eigen::Index top = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::norm(v[i]);
    if (m > best) {
      best = m;
      top = i;
    }
  }
  const Complex lead = v[top];
  if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0)) v = -v;
}

bool energy_less(const ComplexEnergy& a, const ComplexEnergy& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// Sorts discrete-first (each block by ascending Re E), assigns indices and
// recounts kinds.
void finalize(Spectrum& spectrum) {
  auto& states = spectrum.states;
  std::sort(states.begin(), states.end(),
            [](const EigenState& a, const EigenState& b) {
              return energy_less(a.energy, b.energy);
            });
  std::stable_partition(states.begin(), states.end(), [](const EigenState& s) {
    return s.kind != StateKind::continuum;
  });
  spectrum.n_bound = 0;
  spectrum.n_resonance = 0;
  for (int i = 0; i < spectrum.size(); ++i) {
    states[i].index = i;
    if (states[i].kind == StateKind::bound) ++spectrum.n_bound;
    if (states[i].kind == StateKind::resonance) ++spectrum.n_resonance;
  }
}

}  // namespace

const char* state_kind_name(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::bound: return "bound";
    case StateKind::resonance: return "resonance";
    case StateKind::continuum: return "continuum";
  }
  return "unknown";
}

const char* parity_name(Parity parity) noexcept {
  switch (parity) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "unknown";
}

const EigenState& Spectrum::discrete_state(int n) const {
  if (n < 0 || n >= n_discrete()) {
    std::ostringstream msg;
    msg << "state " << n << " is not discrete (spectrum has " << n_discrete()
        << " discrete states)";
    throw Error(ErrorCode::state_not_discrete, msg.str());
  }
  return states[static_cast<std::size_t>(n)];
}

StateKind classify(Complex energy, double theta, double continuum_threshold,
                   const ClassifyOptions& opts) {
  if (std::abs(energy.imag()) < opts.tol_bound &&
      energy.real() < continuum_threshold) {
    return StateKind::bound;
  }
  if (std::abs(energy) <= opts.near_origin) return StateKind::continuum;
  const double off_ray = std::abs(wrap_angle(std::arg(energy) + 2.0 * theta));
  if (off_ray <= opts.tol_ray) return StateKind::continuum;
  if (energy.imag() < -opts.tol_bound) return StateKind::resonance;
  return StateKind::continuum;
}

Parity parity_of(const Eigen::VectorXcd& psi, const Grid& grid,
                 double tol_parity) {
  if (psi.size() != grid.n_points) {
    throw Error(ErrorCode::grid_mismatch,
                "wavefunction length does not match the grid");
  }
  double m_even = 0.0;
  double m_odd = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    const Complex mirrored = psi[grid.mirror(i)];
    m_even += std::norm(psi[i] - mirrored);
    m_odd += std::norm(psi[i] + mirrored);
  }
  m_even *= grid.dx;
  m_odd *= grid.dx;
  if (m_even < tol_parity) return Parity::even;
  if (m_odd < tol_parity) return Parity::odd;
  return Parity::none;
}

Spectrum diagonalize(const ScaledHamiltonian& hamiltonian,
                     const SpectralOptions& opts) {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  detail::complex_eigensystem(hamiltonian.matrix, values, &vectors);

  const double theta = hamiltonian.theta.value();
  const double threshold = hamiltonian.potential.continuum_threshold();
  const int n = hamiltonian.grid.n_points;

  Spectrum spectrum;
  spectrum.theta = hamiltonian.theta;
  spectrum.grid = hamiltonian.grid;
  spectrum.states.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    EigenState& state = spectrum.states[static_cast<std::size_t>(k)];
    state.energy = ComplexEnergy(values[k]);
    state.kind = classify(values[k], theta, threshold, opts.classify);
    state.wavefunction = vectors.col(k);
    const double ratio = c_norm_ratio(state.wavefunction);
    if (ratio < opts.tol_self_orthogonal || !std::isfinite(ratio)) {
      // A self-orthogonal vector signals a coalesced pair. That is fatal for
      // a genuine below-threshold bound state; any other candidate has no
      // trustworthy c-norm and falls back to the continuum (for a confining
      // potential the rotated high-lying levels collapse like this even
      // though their eigenvalues stay accurate).
      const bool true_bound =
          state.kind == StateKind::bound && std::isfinite(threshold);
      if (true_bound || !(ratio > 0.0)) {
        std::ostringstream msg;
        msg << "self-orthogonal eigenvector at E = (" << values[k].real()
            << ", " << values[k].imag() << ")";
        throw Error(ErrorCode::degenerate_normalization, msg.str());
      }
      state.kind = StateKind::continuum;
    }
    c_normalize(state.wavefunction, hamiltonian.grid.dx);
    fix_sign(state.wavefunction);
    state.parity =
        parity_of(state.wavefunction, hamiltonian.grid, opts.tol_parity);
  }
  finalize(spectrum);
  return spectrum;
}

Spectrum compute_spectrum(const Grid& grid, const PotentialSpec& potential,
                          ScalingAngle theta, const SpectralOptions& opts,
                          const UnitSystem& units) {
  Spectrum spectrum = diagonalize(assemble(grid, potential, theta, units), opts);
  if (!opts.confirm_resonances || theta.value() <= 0.0 ||
      spectrum.n_resonance == 0) {
    return spectrum;
  }

  double theta2 = theta.value() + opts.confirm_dtheta;
  if (theta2 >= 0.25 * kPi) theta2 = theta.value() - opts.confirm_dtheta;
  Eigen::VectorXcd probe;
  detail::complex_eigensystem(
      assemble(grid, potential, ScalingAngle(theta2), units).matrix, probe,
      nullptr);

  bool demoted = false;
  for (EigenState& state : spectrum.states) {
    if (state.kind != StateKind::resonance) continue;
    const Complex e = state.energy.value();
    double drift = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < probe.size(); ++k) {
      drift = std::min(drift, std::abs(probe[k] - e));
    }
    const double allowed =
        opts.confirm_drift_ratio * std::abs(e) * opts.confirm_dtheta;
    if (drift > allowed) {
      state.kind = StateKind::continuum;
      demoted = true;
    }
  }
  if (demoted) finalize(spectrum);
  return spectrum;
}

TrajectoryReport theta_trajectory(const Grid& grid,
                                  const PotentialSpec& potential,
                                  const std::vector<double>& thetas,
                                  const TrajectoryOptions& opts,
                                  const UnitSystem& units) {
  if (thetas.size() < 3) {
    throw Error(ErrorCode::invalid_argument,
                "theta trajectory needs at least 3 theta values");
  }
  if (!std::is_sorted(thetas.begin(), thetas.end()) ||
      std::adjacent_find(thetas.begin(), thetas.end()) != thetas.end()) {
    throw Error(ErrorCode::invalid_argument,
                "theta list must be strictly ascending");
  }

  const std::size_t m = thetas.size();
  TrajectoryReport report;
  report.thetas = thetas;

  // Eigenvalues only for all but the largest theta, which seeds the poles.
  std::vector<Eigen::VectorXcd> values(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    detail::complex_eigensystem(
        assemble(grid, potential, ScalingAngle(thetas[k]), units).matrix,
        values[k], nullptr);
  }
  const Spectrum seed = compute_spectrum(
      grid, potential, ScalingAngle(thetas.back()), opts.spectral, units);

  for (int n = 0; n < seed.n_discrete(); ++n) {
    PoleTrajectory traj;
    traj.kind = seed.states[static_cast<std::size_t>(n)].kind;
    traj.energies.assign(m, Complex{});
    traj.energies[m - 1] = seed.states[static_cast<std::size_t>(n)].energy.value();
    for (std::size_t k = m - 1; k-- > 0;) {
      const Complex predicted = traj.energies[k + 1];
      Eigen::Index nearest = 0;
      double best = std::numeric_limits<double>::infinity();
      int in_radius = 0;
      for (Eigen::Index j = 0; j < values[k].size(); ++j) {
        const double dist = std::abs(values[k][j] - predicted);
        if (dist < opts.match_radius) ++in_radius;
        if (dist < best) {
          best = dist;
          nearest = j;
        }
      }
      if (in_radius > 1) {
        std::ostringstream msg;
        msg << "eigenvalue continuation ambiguous near (" << predicted.real()
            << ", " << predicted.imag() << ") at theta = " << thetas[k];
        throw Error(ErrorCode::trajectory_ambiguity, msg.str());
      }
      traj.energies[k] = values[k][nearest];
    }
    for (std::size_t k = 0; k + 1 < m; ++k) {
      traj.max_drift = std::max(
          traj.max_drift, std::abs(traj.energies[k + 1] - traj.energies[k]));
    }
    traj.confirmed = traj.max_drift < opts.tol_stat;
    report.poles.push_back(std::move(traj));
  }
  return report;
}

}  // namespace csemit
