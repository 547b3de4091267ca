"""Smoke tests for the python module: build the pipeline end to end on the
double-barrier well and the oscillator and check a handful of observables."""

import math

import pytest

import csemit


C = 137.035999


@pytest.fixture(scope="module")
def well_pipeline():
    grid = csemit.build_grid(-40.0, 40.0, 801)
    pot = csemit.PotentialSpec.gaussian_well(0.5, -2.1, 0.1)
    spectrum = csemit.compute_spectrum(grid, pot, 0.15)
    table = csemit.build_table(spectrum)
    return grid, pot, spectrum, table


def test_spectrum_structure(well_pipeline):
    _, _, spectrum, _ = well_pipeline
    assert spectrum.n_bound == 2
    assert spectrum.n_resonance >= 3
    ground = spectrum.discrete_state(0)
    assert ground.kind == csemit.StateKind.bound
    assert ground.parity == csemit.Parity.even
    assert ground.energy.re == pytest.approx(-1.537066244, abs=1e-6)
    second_res = spectrum.discrete_state(3)
    assert second_res.kind == csemit.StateKind.resonance
    assert second_res.energy.re == pytest.approx(1.06426, abs=1e-4)
    assert second_res.energy.gamma() > 0


def test_decay_breakdown(well_pipeline):
    _, _, spectrum, table = well_pipeline
    decay = csemit.total_rate(3, spectrum, table)
    assert decay.total == pytest.approx(4.5424e-3, rel=1e-3)
    assert decay.total == pytest.approx(
        decay.discrete_sum + decay.continuum_sum, rel=1e-12
    )
    shift = csemit.total_shift(3, spectrum, table)
    assert shift.total == pytest.approx(3.3059e-3, rel=1e-3)


def test_sum_rule(well_pipeline):
    _, _, spectrum, table = well_pipeline
    for n in range(4):
        c_n = csemit.trk_sum(n, spectrum, table)
        assert abs(c_n - (-0.5)) < 1e-5


def test_dipole_and_momentum(well_pipeline):
    grid, _, spectrum, table = well_pipeline
    d01 = csemit.dipole_element(
        spectrum.discrete_state(0), spectrum.discrete_state(1), grid, 0.15
    )
    assert abs(abs(d01) - 0.688038) < 1e-5
    res = csemit.momentum_consistency(
        spectrum.discrete_state(0), spectrum.discrete_state(1), grid, 0.15
    )
    assert res < 1e-5


def test_harmonic_golden_rule():
    grid = csemit.build_grid(-20.0, 20.0, 401)
    pot = csemit.PotentialSpec.harmonic(1.0)
    spectrum = csemit.compute_spectrum(grid, pot, 0.0)
    table = csemit.build_table(spectrum)
    gamma = csemit.hermitian_rate(1, spectrum, table)
    assert gamma == pytest.approx(1.0 / (4.0 * C), rel=1e-6)
    oracle = csemit.hermitian_oracle(pot, grid, 1)
    assert oracle.rate == pytest.approx(gamma, rel=1e-9)


def test_branch_and_partial_rate():
    assert csemit.arg_neg(1.0 + 0.0j) == -math.pi
    assert csemit.arg_neg(-1.0 + 0.0j) == 0.0
    omega, d2 = 1.3, 0.21
    rate = csemit.partial_rate(omega * d2, omega, C, C * C)
    assert rate == pytest.approx(omega * d2 / (2 * C), rel=1e-12)


def test_errors_are_typed():
    with pytest.raises(csemit.CsemitError):
        csemit.build_grid(-10.0, 11.0, 801)
    with pytest.raises(csemit.CsemitError):
        csemit.ScalingAngle(1.2)
