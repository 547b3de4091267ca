#include <cmath>
#include <map>

#include <doctest.h>

#include "csemit/transition.hpp"

using namespace csemit;

namespace {

const PotentialSpec kPaperWell = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);

const Grid& ho_grid() {
  static const Grid grid = build_grid(-20.0, 20.0, 401);
  return grid;
}

const Spectrum& ho_spectrum() {
  static const Spectrum s =
      compute_spectrum(ho_grid(), PotentialSpec::harmonic(1.0), ScalingAngle(0.0));
  return s;
}

const Grid& paper_grid() {
  static const Grid grid = build_grid(-40.0, 40.0, 801);
  return grid;
}

const Spectrum& paper_spectrum(double theta) {
  static std::map<double, Spectrum> cache;
  auto it = cache.find(theta);
  if (it == cache.end()) {
    it = cache
             .emplace(theta, compute_spectrum(paper_grid(), kPaperWell,
                                              ScalingAngle(theta)))
             .first;
  }
  return it->second;
}

// independent quadrature oracle: analytic oscillator states on the grid
double ho_dipole_oracle() {
  const Grid& g = ho_grid();
  double sum = 0.0;
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.points[i];
    const double phi0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    const double phi1 = std::sqrt(2.0) * x * phi0;
    sum += phi0 * x * phi1;
  }
  return sum * g.dx;
}

}  // namespace

TEST_CASE("harmonic 0-1 dipole matches the quadrature oracle and sqrt(1/2)") {
  const Spectrum& s = ho_spectrum();
  const Complex d =
      dipole_element(s.states[0], s.states[1], s.grid, ScalingAngle(0.0));
  const double oracle = ho_dipole_oracle();
  CHECK(std::abs(std::abs(d) - std::abs(oracle)) < 1e-9);
  CHECK(std::abs(d) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(std::abs(d.imag()) < 1e-12);
}

TEST_CASE("dipole selection rules on the symmetric grid") {
  const Spectrum& s = ho_spectrum();
  const ScalingAngle zero(0.0);
  CHECK(std::abs(dipole_element(s.states[0], s.states[0], s.grid, zero)) <
        1e-10);
  CHECK(std::abs(dipole_element(s.states[0], s.states[2], s.grid, zero)) <
        1e-10);
  CHECK(std::abs(dipole_element(s.states[1], s.states[3], s.grid, zero)) <
        1e-10);
}

TEST_CASE("transition table structure") {
  const Spectrum& s = paper_spectrum(0.15);
  const TransitionTable table = build_table(s);

  const int n = s.size();
  CHECK(table.d.rows() == n);
  // d symmetric, f antisymmetric, Z zero on the diagonal
  double d_asym = 0.0;
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      d_asym = std::max(d_asym, std::abs(table.d(i, j) - table.d(j, i)));
      CHECK(table.f(i, j) == -table.f(j, i));
    }
    CHECK(table.Z(i, i) == Complex{0.0, 0.0});
  }
  CHECK(d_asym < 1e-10);

  // table entries agree with the per-pair operation
  for (int i : {0, 1, 3}) {
    for (int j : {2, 4, 7}) {
      const Complex direct =
          dipole_element(s.states[i], s.states[j], s.grid, s.theta);
      CHECK(std::abs(direct - table.d(i, j)) < 1e-12);
      CHECK(table.Z(i, j) ==
            table.d(i, j) * table.d(i, j) * table.f(i, j));
    }
  }
}

TEST_CASE("theta 0 bound dipoles are real") {
  const Spectrum& s = paper_spectrum(0.0);
  const Complex d =
      dipole_element(s.states[0], s.states[1], s.grid, ScalingAngle(0.0));
  CHECK(std::abs(d.imag()) < 1e-12);
  CHECK(std::abs(d) == doctest::Approx(0.688038330707).epsilon(1e-8));
}

TEST_CASE("bound-bound dipole is theta independent") {
  const Spectrum& s10 = paper_spectrum(0.10);
  const Spectrum& s20 = paper_spectrum(0.20);
  const Complex d10 = dipole_element(s10.states[0], s10.states[1], s10.grid,
                                     ScalingAngle(0.10));
  const Complex d20 = dipole_element(s20.states[0], s20.states[1], s20.grid,
                                     ScalingAngle(0.20));
  // the eigenvector sign gauge may flip between diagonalizations, so the
  // comparison is on d^2 (what every physical formula consumes)
  CHECK(std::abs(d10 * d10 - d20 * d20) < 1e-7);
  CHECK(std::abs(std::abs(d10) - std::abs(d20)) < 1e-7);
}

TEST_CASE("momentum-dipole identity") {
  const Spectrum& ho = ho_spectrum();
  CHECK(momentum_consistency(ho.states[0], ho.states[1], ho.grid,
                             ScalingAngle(0.0)) < 1e-6);
  CHECK(momentum_consistency(ho.states[0], ho.states[0], ho.grid,
                             ScalingAngle(0.0)) == 0.0);

  const Spectrum& s = paper_spectrum(0.15);
  const ScalingAngle theta(0.15);
  // every parity-allowed discrete pair of the default-grid spectrum; for
  // forbidden pairs both sides are round-off zeros and only |p| is meaningful
  for (int a = 0; a < s.n_discrete(); ++a) {
    for (int b = 0; b < s.n_discrete(); ++b) {
      if (a == b) continue;
      if (s.states[a].parity != s.states[b].parity) {
        CHECK(momentum_consistency(s.states[a], s.states[b], s.grid, theta) <
              1e-5);
      } else {
        CHECK(std::abs(momentum_element(s.states[a], s.states[b], s.grid,
                                        theta)) < 1e-10);
      }
    }
  }
}

TEST_CASE("grid mismatch is rejected") {
  const Spectrum& ho = ho_spectrum();
  const Grid other = build_grid(-10.0, 10.0, 101);
  CHECK_THROWS_AS(
      dipole_element(ho.states[0], ho.states[1], other, ScalingAngle(0.0)),
      Error);
  try {
    dipole_element(ho.states[0], ho.states[1], other, ScalingAngle(0.0));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::grid_mismatch);
  }
}
