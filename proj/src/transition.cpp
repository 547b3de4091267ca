#include "csemit/transition.hpp"

#include <cmath>

namespace csemit {

namespace {

void check_grid(const EigenState& state, const Grid& grid) {
  if (state.wavefunction.size() != grid.n_points) {
    throw Error(ErrorCode::grid_mismatch,
                "eigenstate does not live on the supplied grid");
  }
}

}  // namespace

Complex dipole_element(const EigenState& a, const EigenState& b,
                       const Grid& grid, ScalingAngle theta,
                       const UnitSystem& units) {
  check_grid(a, grid);
  check_grid(b, grid);
  Complex sum = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    sum += a.wavefunction[i] * grid.points[i] * b.wavefunction[i];
  }
  return units.charge * theta.phase() * sum * grid.dx;
}

Complex momentum_element(const EigenState& a, const EigenState& b,
                         const Grid& grid, ScalingAngle theta,
                         const UnitSystem& units) {
  check_grid(a, grid);
  check_grid(b, grid);
  const Eigen::MatrixXd deriv = derivative_matrix(grid);
  // (psi_b | p e^{-i theta} | psi_a), bra on the left of the c-product
  const Eigen::VectorXcd da = deriv * a.wavefunction;
  const Complex overlap = (b.wavefunction.transpose() * da)(0);
  return std::exp(Complex(0.0, -theta.value())) * Complex(0.0, -units.hbar) *
         overlap * grid.dx;
}

double momentum_consistency(const EigenState& a, const EigenState& b,
                            const Grid& grid, ScalingAngle theta,
                            const UnitSystem& units) {
  if (a.index == b.index) return 0.0;
  const Complex p = momentum_element(a, b, grid, theta, units);
  const Complex f = complex_frequency(a.energy, b.energy, units);
  const Complex d = dipole_element(a, b, grid, theta, units);
  const Complex rhs =
      Complex(0.0, -units.mass / (units.charge * units.hbar)) * f * d;
  return std::abs(p - rhs) / std::max(std::abs(p), 1e-300);
}

TransitionTable build_table(const Spectrum& spectrum,
                            const UnitSystem& units) {
  const int n_states = spectrum.size();
  const int n_grid = spectrum.grid.n_points;

  Eigen::MatrixXcd u(n_grid, n_states);
  for (int j = 0; j < n_states; ++j) {
    u.col(j) = spectrum.states[static_cast<std::size_t>(j)].wavefunction;
  }

  TransitionTable table;
  const Complex pref =
      units.charge * spectrum.theta.phase() * spectrum.grid.dx;
  Eigen::MatrixXcd xu = spectrum.grid.points.asDiagonal() * u;
  table.d.noalias() = u.transpose() * xu;
  table.d *= pref;

  table.f.resize(n_states, n_states);
  for (int i = 0; i < n_states; ++i) {
    for (int j = 0; j < n_states; ++j) {
      table.f(i, j) = complex_frequency(
          spectrum.states[static_cast<std::size_t>(i)].energy,
          spectrum.states[static_cast<std::size_t>(j)].energy, units);
    }
  }
  table.Z = table.d.array().square() * table.f.array();
  return table;
}

}  // namespace csemit
