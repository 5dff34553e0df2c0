"""Smoke tests for the compiled extension: anchors and basic wiring only;
the C++ suites carry the detailed coverage."""

import math

import pytest

import casent


def test_matsubara_anchor():
    z1 = casent.matsubara_frequency(1, 300.0).mev
    assert abs(z1 / 161.9 - 1.0) < 5e-3
    assert casent.matsubara_frequency(0, 300.0).mev == 0.0


def test_ladder_and_conversion():
    ladder = casent.matsubara_ladder(300.0, 3)
    assert len(ladder) == 3
    assert ladder[2].mev == pytest.approx(3 * ladder[0].mev)
    assert casent.mev_to_radps(1.0) == pytest.approx(1.519e12, rel=1e-3)


def test_relaxation_models():
    bg = casent.RelaxationModel.bloch_gruneisen(165.0, 300.0, 34.5)
    assert casent.nu_at(bg, 300.0).mev == pytest.approx(34.5)
    assert casent.nu_at(bg, 2.0).mev / casent.nu_at(bg, 1.0).mev == pytest.approx(32.0, rel=0.02)


def test_permittivity():
    plasma = casent.PermittivityModel.plasma(9000.0)
    assert casent.permittivity_imag_axis(plasma, 9000.0, 300.0) == pytest.approx(2.0)
    drude = casent.PermittivityModel.drude(9000.0, casent.RelaxationModel.constant(34.5))
    expected = 1.0 + 9000.0**2 / (161.9 * (161.9 + 34.5))
    assert casent.permittivity_imag_axis(drude, 161.9, 300.0) == pytest.approx(expected)


def test_free_energy_and_zero_point():
    plasma = casent.PlateSystem(1e-6, casent.PermittivityModel.plasma(9000.0))
    f = casent.free_energy(plasma, 300.0)
    assert f.f_j_per_m2 < 0.0
    assert f.est_error_j_per_m2 < abs(f.f_j_per_m2) * 1e-8

    drude = casent.PlateSystem(
        1e-6,
        casent.PermittivityModel.drude(9000.0, casent.RelaxationModel.constant(34.5)),
    )
    assert casent.free_energy(drude, 300.0).f_j_per_m2 > f.f_j_per_m2

    e0 = casent.zero_temperature_energy(plasma).e_j_per_m2
    assert e0 < 0.0
    ideal = -math.pi**2 * 1.054571817e-34 * 299792458.0 / (720.0 * 1e-18)
    assert abs(e0) < abs(ideal)  # finite conductivity weakens the attraction


def test_crossover_and_reflection():
    t = casent.crossover_temperature(34.5e-3, 10)
    assert 1e-4 < t < 1e-3
    r = casent.reflection_coeffs(1.0, 2.0, 1.0)
    assert r.r_tm == 0.0 and r.r_te == 0.0


def test_error_translation():
    with pytest.raises(ValueError):
        casent.matsubara_ladder(0.0, 4)
    plasma = casent.PlateSystem(1e-6, casent.PermittivityModel.plasma(9000.0))
    with pytest.raises(casent.CancellationError):
        casent.thermal_correction(plasma, 1e-6)
