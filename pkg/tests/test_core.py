import cmath
import math

import pytest

from dirac_double_barrier import (
    BoundaryEnergy,
    ConfigError,
    MatrixRange,
    PotentialConfig,
    Region,
    SingularEnergy,
    Zone,
    alpha_beta,
    classify,
    kinematics,
    singular_energies,
    wave_vector,
    zone_interval,
)


def test_half_width_is_sum_of_parts(reference):
    assert reference.a == 5.5


def test_potential_levels(reference):
    assert reference.potential(Region.ZERO) == 0.0
    assert reference.potential(Region.PLUS) == 8.0
    assert reference.potential(Region.MINUS) == 4.0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(v_plus=8.0, v_minus=2.0, a_plus=3.0, a_minus=2.5),
        dict(v_plus=8.0, v_minus=1.2, a_plus=3.0, a_minus=2.5),
        dict(v_plus=5.9, v_minus=4.0, a_plus=3.0, a_minus=2.5),
        dict(v_plus=8.0, v_minus=4.0, a_plus=0.0, a_minus=2.5),
        dict(v_plus=8.0, v_minus=4.0, a_plus=3.0, a_minus=-1.0),
        dict(v_plus=8.0, v_minus=4.0, a_plus=3.0, a_minus=2.5, m=0.0),
        dict(v_plus=8.0, v_minus=4.2, a_plus=3.0, a_minus=2.5, m=2.0),
    ],
)
def test_structural_conditions_are_enforced(kwargs):
    with pytest.raises(ConfigError):
        PotentialConfig(**kwargs)


def test_mass_scaled_structure_is_accepted():
    cfg = PotentialConfig(v_plus=16.0, v_minus=8.0, a_plus=1.5, a_minus=1.25, m=2.0)
    assert cfg.a == 2.75


def test_singular_energies_of_reference(reference):
    assert singular_energies(reference) == [1.0, 3.0, 5.0, 7.0, 9.0]


def test_zone_intervals_of_reference(reference):
    assert zone_interval(Zone.LOWER_KLEIN, reference) == (1.0, 3.0)
    assert zone_interval(Zone.GAP_LOWER, reference) == (3.0, 5.0)
    assert zone_interval(Zone.HIGHER_KLEIN, reference) == (5.0, 7.0)
    assert zone_interval(Zone.CONVENTIONAL, reference) == (7.0, 9.0)
    lo, hi = zone_interval(Zone.ABOVE_BARRIER, reference)
    assert lo == 9.0 and math.isinf(hi)


@pytest.mark.parametrize(
    "e,rng,zone",
    [
        (2.0, MatrixRange.I, Zone.LOWER_KLEIN),
        (3.5, MatrixRange.I, Zone.GAP_LOWER),
        (4.5, MatrixRange.II, Zone.GAP_LOWER),
        (6.0, MatrixRange.II, Zone.HIGHER_KLEIN),
        (7.5, MatrixRange.II, Zone.CONVENTIONAL),
        (8.5, MatrixRange.III, Zone.CONVENTIONAL),
        (9.5, MatrixRange.III, Zone.ABOVE_BARRIER),
        (30.0, MatrixRange.III, Zone.ABOVE_BARRIER),
    ],
)
def test_classification(reference, e, rng, zone):
    assert classify(e, reference) == (rng, zone)


@pytest.mark.parametrize("e", [0.5, 1.0, 3.0, 4.0 + 1e-12, 5.0, 7.0, 8.0, 9.0 - 1e-13])
def test_classify_rejects_boundaries(reference, e):
    with pytest.raises(BoundaryEnergy):
        classify(e, reference)


def test_wave_vector_oscillatory_branch(reference):
    k = wave_vector(2.0, Region.ZERO, reference)
    assert abs(k - 1j * math.sqrt(3.0)) < 1e-14
    k = wave_vector(2.0, Region.PLUS, reference)
    assert abs(k - 1j * math.sqrt(35.0)) < 1e-14


def test_wave_vector_evanescent_branch(reference):
    k = wave_vector(7.5, Region.PLUS, reference)
    assert abs(k - math.sqrt(0.75)) < 1e-14
    k = wave_vector(4.2, Region.MINUS, reference)
    assert abs(k - math.sqrt(0.96)) < 1e-14


@pytest.mark.parametrize("e,region", [(2.0, Region.ZERO), (7.5, Region.PLUS), (4.2, Region.MINUS)])
def test_dispersion_identity(reference, e, region):
    # k^2 + (E - U)^2 = m^2 on both branches
    k = wave_vector(e, region, reference)
    d = e - reference.potential(region)
    assert abs(k * k + d * d - reference.m**2) < 1e-12


@pytest.mark.parametrize("e,region", [
    (3.0, Region.MINUS),
    (5.0, Region.MINUS),
    (7.0, Region.PLUS),
    (9.0, Region.PLUS),
    (1.0 + 1e-12, Region.ZERO),
])
def test_singular_energies_are_rejected(reference, e, region):
    with pytest.raises(SingularEnergy):
        wave_vector(e, region, reference)
    with pytest.raises(SingularEnergy):
        alpha_beta(e, region, reference)


@pytest.mark.parametrize("e,region,sign", [
    (7.5, Region.PLUS, 1.0),    # evanescent
    (4.2, Region.MINUS, 1.0),
    (2.0, Region.ZERO, -1.0),   # oscillatory
    (2.0, Region.MINUS, -1.0),
    (9.5, Region.PLUS, -1.0),
])
def test_weight_product_sign(reference, e, region, sign):
    alpha, beta = alpha_beta(e, region, reference)
    assert abs(alpha * beta - sign) < 1e-12


def test_kinematics_bundles_the_pieces(reference):
    kin = kinematics(6.0, Region.MINUS, reference)
    assert kin.k == wave_vector(6.0, Region.MINUS, reference)
    alpha, beta = alpha_beta(6.0, Region.MINUS, reference)
    assert kin.alpha == alpha and kin.beta == beta
