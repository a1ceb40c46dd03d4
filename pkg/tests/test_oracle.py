import numpy as np
import pytest

from dirac_double_barrier import (
    find_resonances,
    scatter,
    solve_amplitudes,
    wavefunction_profile,
    Zone,
)
from frozen_values import FLOOR_ENHANCEMENT

SAMPLE_ENERGIES = (1.3, 2.5, 3.5, 4.5, 6.0, 7.5, 8.5, 9.5, 11.4)


@pytest.mark.parametrize("e", SAMPLE_ENERGIES)
def test_matching_residual_is_tiny(reference, e):
    amps = solve_amplitudes(e, reference)
    assert amps.residual < 1e-10


@pytest.mark.parametrize("e", SAMPLE_ENERGIES)
def test_fixed_amplitudes(reference, e):
    amps = solve_amplitudes(e, reference)
    assert amps.a[0] == 1.0
    assert amps.b[4] == 0.0


@pytest.mark.parametrize("e", SAMPLE_ENERGIES)
def test_flux_conservation(reference, e):
    amps = solve_amplitudes(e, reference)
    assert abs(abs(amps.t) ** 2 + abs(amps.r) ** 2 - 1.0) < 1e-10


@pytest.mark.parametrize("e", SAMPLE_ENERGIES)
def test_agreement_with_transfer_route(reference, e):
    amps = solve_amplitudes(e, reference)
    s = scatter(e, reference)
    assert abs(amps.t - s.t) < 1e-12
    assert abs(amps.r - s.r) < 1e-12


def test_full_transmission_at_tabulated_resonance(reference):
    amps = solve_amplitudes(5.1824247690, reference)
    assert abs(amps.t) ** 2 == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("e", (2.5, 6.0, 9.5))
def test_profile_is_continuous_at_interfaces(reference, e):
    delta = 1e-9
    for x0 in (-reference.a, -reference.a_minus, reference.a_minus, reference.a):
        left, right = wavefunction_profile(e, reference, [x0 - delta, x0 + delta])
        assert abs(left.psi_plus - right.psi_plus) < 1e-6
        assert abs(left.psi_minus - right.psi_minus) < 1e-6


def test_profile_requires_solvable_energy(reference):
    samples = wavefunction_profile(2.0, reference, np.linspace(-8.0, 8.0, 41))
    assert len(samples) == 41
    assert all(s.density >= 0.0 for s in samples)


def test_floor_density_enhancement_at_first_resonance(reference):
    e_star = find_resonances(reference, [Zone.LOWER_KLEIN])[0].energy
    inner = np.linspace(-reference.a_minus, reference.a_minus, 4001)
    outer = np.concatenate([
        np.linspace(-reference.a - 10.0, -reference.a, 4001),
        np.linspace(reference.a, reference.a + 10.0, 4001),
    ])
    floor_max = max(s.density for s in wavefunction_profile(e_star, reference, inner))
    outside_max = max(s.density for s in wavefunction_profile(e_star, reference, outer))
    assert floor_max / outside_max == pytest.approx(FLOOR_ENHANCEMENT, rel=1e-9)
