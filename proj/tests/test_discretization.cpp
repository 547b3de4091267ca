#include <cmath>

#include <doctest.h>

#include "csemit/hamiltonian.hpp"
#include "csemit/spectral.hpp"

using namespace csemit;

TEST_CASE("build_grid arithmetic and preconditions") {
  const Grid g = build_grid(-40.0, 40.0, 801);
  CHECK(g.dx == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g.points[0] == -40.0);
  CHECK(g.points[800] == 40.0);
  CHECK(g.points[400] == 0.0);

  const Grid coarse = build_grid(-40.0, 40.0, 64);
  CHECK(coarse.dx == doctest::Approx(80.0 / 63.0).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(build_grid(-40.0, 41.0, 801), doctest::Contains("x_min"),
                       Error);
  CHECK_THROWS_AS(build_grid(-40.0, 40.0, 63), Error);
  CHECK_THROWS_AS(build_grid(5.0, -5.0, 801), Error);
  try {
    build_grid(-40.0, 40.0, 63);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::too_few_points);
  }
}

TEST_CASE("grid is mirror-exact") {
  const Grid g = build_grid(-17.0, 17.0, 257);
  for (int i = 0; i < g.n_points; ++i) {
    CHECK(g.points[i] == -g.points[g.mirror(i)]);
  }
}

TEST_CASE("kinetic matrix entries match the sinc-DVR closed form") {
  const Grid g = build_grid(-10.0, 10.0, 101);
  const Eigen::MatrixXd t = kinetic_matrix(g);
  const double inv_dx2 = 1.0 / (g.dx * g.dx);
  CHECK(t(3, 3) == doctest::Approx(kPi * kPi * inv_dx2 / 6.0).epsilon(1e-14));
  CHECK(t(3, 4) == doctest::Approx(-inv_dx2).epsilon(1e-14));
  CHECK(t(3, 5) == doctest::Approx(inv_dx2 / 4.0).epsilon(1e-14));
  CHECK(t(5, 3) == t(3, 5));
}

TEST_CASE("derivative matrix is antisymmetric with the sinc entries") {
  const Grid g = build_grid(-10.0, 10.0, 101);
  const Eigen::MatrixXd d = derivative_matrix(g);
  CHECK(d(4, 4) == 0.0);
  CHECK(d(4, 5) == doctest::Approx(1.0 / g.dx).epsilon(1e-14));
  CHECK(d(4, 6) == doctest::Approx(-0.5 / g.dx).epsilon(1e-14));
  CHECK((d + d.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assemble at theta 0 is the real Schroedinger matrix") {
  const Grid g = build_grid(-20.0, 20.0, 201);
  const PotentialSpec v = PotentialSpec::harmonic(1.0);
  const ScaledHamiltonian h = assemble(g, v, ScalingAngle(0.0));
  const Eigen::MatrixXd t = kinetic_matrix(g);
  double max_imag = 0.0;
  double max_diff = 0.0;
  for (int i = 0; i < g.n_points; ++i) {
    for (int j = 0; j < g.n_points; ++j) {
      max_imag = std::max(max_imag, std::abs(h.matrix(i, j).imag()));
      const double expect =
          t(i, j) + (i == j ? v(Complex(g.points[i], 0.0)).real() : 0.0);
      max_diff = std::max(max_diff, std::abs(h.matrix(i, j).real() - expect));
    }
  }
  CHECK(max_imag == 0.0);
  CHECK(max_diff == 0.0);
}

TEST_CASE("assembled matrix is complex symmetric at finite theta") {
  const Grid g = build_grid(-20.0, 20.0, 201);
  const PotentialSpec v = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);
  const ScaledHamiltonian h = assemble(g, v, ScalingAngle(0.15));
  const double asym =
      (h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff();
  CHECK(asym == 0.0);
  // diagonal carries the complex-rotated potential
  CHECK(h.matrix(100, 100).imag() != 0.0);
}

TEST_CASE("theta continuity of assembly") {
  const Grid g = build_grid(-20.0, 20.0, 201);
  const PotentialSpec v = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);
  const ScaledHamiltonian base = assemble(g, v, ScalingAngle(0.15));
  const double diff1 =
      (assemble(g, v, ScalingAngle(0.151)).matrix - base.matrix)
          .cwiseAbs()
          .maxCoeff();
  const double diff2 =
      (assemble(g, v, ScalingAngle(0.152)).matrix - base.matrix)
          .cwiseAbs()
          .maxCoeff();
  CHECK(diff1 > 0.0);
  CHECK(diff2 / diff1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("harmonic ground state energy is omega/2") {
  const Grid g = build_grid(-20.0, 20.0, 201);
  const Spectrum s =
      compute_spectrum(g, PotentialSpec::harmonic(1.0), ScalingAngle(0.0));
  CHECK(s.states.front().energy.re == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("potential overflow is reported") {
  const Grid g = build_grid(-1e200, 1e200, 64);
  const PotentialSpec v = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);
  CHECK_THROWS_AS(assemble(g, v, ScalingAngle(0.0)), Error);
  try {
    assemble(g, v, ScalingAngle(0.0));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::potential_not_evaluable);
  }
}
