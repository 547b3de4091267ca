#pragma once

#include <Eigen/Core>

#include "csemit/spectral.hpp"

namespace csemit {

/// c-product transition data for one Spectrum, indexed like its state list:
///   d[n][m] = q e^{i theta} sum_i u_n(x_i) x_i u_m(x_i) dx   (symmetric)
///   f[n][m] = (E_n - E_m)/hbar                               (antisymmetric)
///   Z[n][m] = d[n][m]^2 f[n][m]
struct TransitionTable {
  Eigen::MatrixXcd d;
  Eigen::MatrixXcd f;
  Eigen::MatrixXcd Z;
};

/// Dipole element along the rotated contour, q Int_{l_theta} psi a xi psi b.
/// Throws grid_mismatch if either wavefunction does not live on this grid.
Complex dipole_element(const EigenState& a, const EigenState& b,
                       const Grid& grid, ScalingAngle theta,
                       const UnitSystem& units = {});

/// Momentum element (psi_b | p exp(-i theta) | psi_a) via the sinc
/// first-derivative matrix (theta-independent for converged states).
Complex momentum_element(const EigenState& a, const EigenState& b,
                         const Grid& grid, ScalingAngle theta,
                         const UnitSystem& units = {});

/// Residual of the momentum-dipole identity p_ab = -i (m/(q hbar)) f_ab d_ab,
/// relative to |p_ab|; returns 0 for a diagonal pair (both sides vanish).
double momentum_consistency(const EigenState& a, const EigenState& b,
                            const Grid& grid, ScalingAngle theta,
                            const UnitSystem& units = {});

/// Builds d, f, Z for all ordered state pairs of the spectrum.
TransitionTable build_table(const Spectrum& spectrum,
                            const UnitSystem& units = {});

}  // namespace csemit
