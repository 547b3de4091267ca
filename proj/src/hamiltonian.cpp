#include "csemit/hamiltonian.hpp"

#include <cmath>

namespace csemit {

Eigen::MatrixXd kinetic_matrix(const Grid& grid, const UnitSystem& units) {
  const int n = grid.n_points;
  const double pref = units.hbar * units.hbar / (2.0 * units.mass);
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
  Eigen::MatrixXd t(n, n);
  for (int i = 0; i < n; ++i) {
    t(i, i) = pref * inv_dx2 * kPi * kPi / 3.0;
    for (int j = 0; j < i; ++j) {
      const int k = i - j;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double value =
          pref * inv_dx2 * 2.0 * sign / (static_cast<double>(k) * k);
      t(i, j) = value;
      t(j, i) = value;
    }
  }
  return t;
}

Eigen::MatrixXd derivative_matrix(const Grid& grid) {
  const int n = grid.n_points;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const int k = i - j;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double value = sign / (grid.dx * static_cast<double>(k));
      d(i, j) = value;
      d(j, i) = -value;
    }
  }
  return d;
}

ScaledHamiltonian assemble(const Grid& grid, const PotentialSpec& potential,
                           ScalingAngle theta, const UnitSystem& units) {
  const int n = grid.n_points;
  const Complex scale = std::polar(1.0, -2.0 * theta.value());
  const Complex ray = theta.phase();

  Eigen::MatrixXcd h = scale * kinetic_matrix(grid, units);
  for (int i = 0; i < n; ++i) {
    const Complex v = potential(ray * grid.points[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::potential_not_evaluable,
                  "potential value not finite at grid point " +
                      std::to_string(grid.points[i]) + " (theta = " +
                      std::to_string(theta.value()) + ")");
    }
    h(i, i) += v;
  }
  return ScaledHamiltonian{std::move(h), theta, grid, potential};
}

}  // namespace csemit
