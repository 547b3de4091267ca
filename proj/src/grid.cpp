#include "csemit/grid.hpp"

#include <cmath>
#include <sstream>

namespace csemit {

Grid build_grid(double x_min, double x_max, int n_points) {
  if (!(x_min < 0.0) || x_min != -x_max) {
    std::ostringstream msg;
    msg << "grid domain must satisfy x_min = -x_max < 0, got [" << x_min
        << ", " << x_max << "]";
    throw Error(ErrorCode::asymmetric_domain, msg.str());
  }
  if (n_points < 64) {
    throw Error(ErrorCode::too_few_points,
                "grid needs at least 64 points, got " +
                    std::to_string(n_points));
  }

  Grid grid;
  grid.x_min = x_min;
  grid.x_max = x_max;
  grid.n_points = n_points;
  grid.dx = (x_max - x_min) / static_cast<double>(n_points - 1);
  grid.points.resize(n_points);
  // Fill mirror pairs together so x[i] == -x[n-1-i] holds bit-exactly.
  for (int i = 0; i < n_points / 2; ++i) {
    const double x = x_min + grid.dx * static_cast<double>(i);
    grid.points[i] = x;
    grid.points[n_points - 1 - i] = -x;
  }
  if (n_points % 2 == 1) grid.points[n_points / 2] = 0.0;
  return grid;
}

}  // namespace csemit
