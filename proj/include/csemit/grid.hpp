#pragma once

#include <Eigen/Core>

#include "csemit/types.hpp"

namespace csemit {

/// Uniform spatial grid, symmetric about the origin.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;
  double dx = 0.0;
  Eigen::VectorXd points;

  /// Index of the mirror point -x_i (grid symmetry makes this exact).
  int mirror(int i) const { return n_points - 1 - i; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.x_min == b.x_min && a.x_max == b.x_max &&
           a.n_points == b.n_points;
  }
};

/// Builds the uniform grid on [x_min, x_max]. Requires x_min = -x_max < 0
/// and at least 64 points; grid values are mirror-exact: x[i] = -x[n-1-i].
Grid build_grid(double x_min, double x_max, int n_points);

}  // namespace csemit
