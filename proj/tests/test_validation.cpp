#include <cmath>
#include <map>

#include <doctest.h>

#include "csemit/validation.hpp"

using namespace csemit;

namespace {

const PotentialSpec kPaperWell = PotentialSpec::gaussian_well(0.5, -2.1, 0.1);

const Grid& paper_grid() {
  static const Grid grid = build_grid(-40.0, 40.0, 801);
  return grid;
}

struct Pipeline {
  Spectrum spectrum;
  TransitionTable table;
};

const Pipeline& paper_pipeline(double theta) {
  static std::map<double, Pipeline> cache;
  auto it = cache.find(theta);
  if (it == cache.end()) {
    Spectrum s =
        compute_spectrum(paper_grid(), kPaperWell, ScalingAngle(theta));
    TransitionTable t = build_table(s);
    it = cache.emplace(theta, Pipeline{std::move(s), std::move(t)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("dipole sum rule approaches -1/2 on the full basis") {
  const Grid ho_grid = build_grid(-20.0, 20.0, 401);
  const Spectrum ho = compute_spectrum(ho_grid, PotentialSpec::harmonic(1.0),
                                       ScalingAngle(0.0));
  const TransitionTable ho_table = build_table(ho);
  CHECK(std::abs(trk_sum(0, ho, ho_table) - Complex(-0.5, 0.0)) < 1e-6);

  const Pipeline& p = paper_pipeline(0.15);
  for (int n : {0, 1, 2, 3}) {
    CHECK(std::abs(trk_sum(n, p.spectrum, p.table) - Complex(-0.5, 0.0)) <
          1e-5);
  }
  // n-independence
  CHECK(std::abs(trk_sum(1, p.spectrum, p.table) -
                 trk_sum(3, p.spectrum, p.table)) < 1e-6);

  const Pipeline& herm = paper_pipeline(0.0);
  for (int n : {0, 1, 2, 3}) {
    CHECK(std::abs(trk_sum(n, herm.spectrum, herm.table) - Complex(-0.5, 0.0)) <
          1e-5);
  }
}

TEST_CASE("sum rule report aggregates the worst error") {
  const Pipeline& p = paper_pipeline(0.15);
  const SumRuleReport report =
      sum_rule_report(p.spectrum, p.table, {0, 1, 2, 3});
  CHECK(report.per_initial.size() == 4);
  CHECK(report.reference == -0.5);
  CHECK(report.max_abs_error < 1e-5);
}

TEST_CASE("theta scan over the rate is flat") {
  const ThetaScanReport scan =
      theta_scan(Observable::total_rate, 3, paper_grid(), kPaperWell,
                 {0.12, 0.15, 0.18});
  CHECK(scan.values.size() == 3);
  CHECK(scan.max_rel_deviation < 1e-3);
  for (double value : scan.values) {
    CHECK(value == doctest::Approx(4.5424e-3).epsilon(1e-3));
  }
}

TEST_CASE("theta scan trivial and error cases") {
  const ThetaScanReport single = theta_scan(
      Observable::total_rate, 3, paper_grid(), kPaperWell, {0.15});
  CHECK(single.max_rel_deviation == 0.0);

  // far below exposure the initial state never leaves the continuum
  CHECK_THROWS_AS(theta_scan(Observable::total_rate, 3, paper_grid(),
                             kPaperWell, {0.005}),
                  Error);
  CHECK_THROWS_AS(theta_scan(Observable::total_rate, 3, paper_grid(),
                             kPaperWell, {}),
                  Error);
}

TEST_CASE("hermitian oracle values") {
  const UnitSystem units;
  const Grid ho_grid = build_grid(-20.0, 20.0, 401);
  const HermitianReference ho =
      hermitian_oracle(PotentialSpec::harmonic(1.0), ho_grid, 1);
  CHECK(ho.rate == doctest::Approx(1.0 / (4.0 * units.c_light)).epsilon(1e-9));

  const HermitianReference ground =
      hermitian_oracle(PotentialSpec::harmonic(1.0), ho_grid, 0);
  CHECK(ground.rate == 0.0);
  CHECK(ground.shift != 0.0);
  CHECK(std::isfinite(ground.shift));
}

TEST_CASE("hermitian oracle agrees with the scaled pipeline") {
  const Pipeline& p = paper_pipeline(0.15);
  const HermitianReference oracle =
      hermitian_oracle(kPaperWell, paper_grid(), 1);
  const double pipeline_rate = total_rate(1, p.spectrum, p.table).total;
  CHECK(std::abs(pipeline_rate - oracle.rate) / oracle.rate < 1e-6);
  const double pipeline_shift = total_shift(1, p.spectrum, p.table).total;
  CHECK(std::abs(pipeline_shift - oracle.shift) / std::abs(oracle.shift) <
        1e-6);

  // ground bound state: rate vanishes on both routes, shift still agrees
  const HermitianReference ground =
      hermitian_oracle(kPaperWell, paper_grid(), 0);
  CHECK(std::abs(total_rate(0, p.spectrum, p.table).total) < 1e-12);
  CHECK(std::abs(ground.rate) < 1e-18);
  const double ground_shift = total_shift(0, p.spectrum, p.table).total;
  CHECK(std::abs(ground_shift - ground.shift) / std::abs(ground.shift) < 1e-6);
}

TEST_CASE("hermitian oracle rejects unbound states") {
  CHECK_THROWS_AS(hermitian_oracle(kPaperWell, paper_grid(), 2), Error);
  try {
    hermitian_oracle(kPaperWell, paper_grid(), 2);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::state_not_bound);
  }
}

TEST_CASE("cross-discretization agreement of the sharp poles") {
  const Grid grid_b = build_grid(-48.0, 48.0, 1201);
  const CrossGridReport report = cross_discretization_check(
      kPaperWell, ScalingAngle(0.20), paper_grid(), grid_b, 3);
  REQUIRE(report.poles.size() == 5); // 2 bound + 3 resonances
  CHECK(report.max_delta < 1e-6);

  // identical grids agree to rounding
  const CrossGridReport self = cross_discretization_check(
      kPaperWell, ScalingAngle(0.20), paper_grid(), paper_grid(), 3);
  CHECK(self.max_delta < 1e-13);
}

TEST_CASE("under-resolved grid fails the pole-count check") {
  const Grid coarse = build_grid(-40.0, 40.0, 64);
  CHECK_THROWS_AS(cross_discretization_check(kPaperWell, ScalingAngle(0.15),
                                             coarse, paper_grid(), 3),
                  Error);
  try {
    cross_discretization_check(kPaperWell, ScalingAngle(0.15), coarse,
                               paper_grid(), 3);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::pole_count_mismatch);
  }
}
