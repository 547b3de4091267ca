#pragma once

#include <Eigen/Core>

#include "csemit/grid.hpp"
#include "csemit/types.hpp"

namespace csemit {

/// Sinc-pseudospectral kinetic-energy matrix (hbar^2/2m included):
///   T[i][i] = (hbar^2/2m) * pi^2/(3 dx^2)
///   T[i][j] = (hbar^2/2m) * 2 (-1)^(i-j) / (dx^2 (i-j)^2),  i != j
Eigen::MatrixXd kinetic_matrix(const Grid& grid, const UnitSystem& units = {});

/// Sinc-pseudospectral first-derivative matrix (antisymmetric):
///   D[i][j] = (-1)^(i-j) / (dx (i-j)),  i != j;  D[i][i] = 0
Eigen::MatrixXd derivative_matrix(const Grid& grid);

/// Complex-scaled electronic Hamiltonian in the scaled representation
/// u(x) = exp(i theta/2) psi(x exp(i theta)): a complex symmetric matrix
///   H = T exp(-2 i theta) + diag V(x_i exp(i theta)).
struct ScaledHamiltonian {
  Eigen::MatrixXcd matrix;
  ScalingAngle theta;
  Grid grid;
  PotentialSpec potential;
};

/// Assembles H(theta). Throws potential_not_evaluable when V produces a
/// non-finite value anywhere on the rotated ray.
ScaledHamiltonian assemble(const Grid& grid, const PotentialSpec& potential,
                           ScalingAngle theta, const UnitSystem& units = {});

}  // namespace csemit
