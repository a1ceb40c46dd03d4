import pytest

from dirac_double_barrier import (
    PotentialConfig,
    attach_widths,
    find_above_barrier,
    find_resonances,
)


@pytest.fixture(scope="session")
def reference():
    return PotentialConfig(v_plus=8.0, v_minus=4.0, a_plus=3.0, a_minus=2.5)


@pytest.fixture(scope="session")
def reference_resonances(reference):
    return find_resonances(reference) + find_above_barrier(reference, 11.0)


@pytest.fixture(scope="session")
def reference_widths(reference, reference_resonances):
    return attach_widths(reference_resonances, reference)
