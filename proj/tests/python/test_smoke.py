import math

import pytest

import qbertrand as qb


def test_coulomb_and_oscillator_energies():
    assert qb.energy_coulomb(0, 0).energy == pytest.approx(-0.5, rel=1e-14)
    assert qb.energy_oscillator(1, 2).energy == pytest.approx(5.5, rel=1e-14)


def test_fd_spectrum_accepts_python_potential():
    grid = qb.RadialGrid(1e-3, 20.0, 2000)
    levels = qb.fd_spectrum(lambda r: 0.5 * r * r, 0, grid, 2)
    assert levels[0].energy == pytest.approx(1.5, abs=1e-3)
    assert len(levels[0].u) == len(grid)


def test_classifier_and_second_class_example():
    assert qb.classify_alpha(2.0) == qb.AlphaClass.oscillator
    p = qb.SecondClassParams()
    p.b = 1.0
    d = qb.derived_coeffs(p)
    assert (d.A2, d.B1, d.D3) == (1.0, 4.0, 6.0)


def test_errors_map_to_python():
    with pytest.raises(qb.Error, match="DegenerateCoefficient"):
        p = qb.SecondClassParams()
        p.b = 0.0
        qb.derived_coeffs(p)


def test_wavefunction_and_morse():
    w = qb.make_wavefunction(qb.oscillator_params(0, 1.0), 0)
    assert w(1.0) / w(2.0) == pytest.approx(math.exp(1.5))
    quad, _ = qb.morse_view(qb.FamilyParams(-1.0, -0.5))
    assert quad == 1.0


def test_verification_subset_passes():
    results = qb.run_verification(42, ["couplings", "bertrand"])
    assert results and qb.all_passed(results)
