import pytest

from dirac_double_barrier import run_verification, sample_energies, singular_energies
from dirac_double_barrier import verify as verify_mod
from dirac_double_barrier.transfer import Matrix2x2, full_matrix


def test_reference_invariants_hold(reference):
    report = run_verification(reference, samples=500, seed=1)
    assert report.passed
    assert len(report.checks) == 5
    for check in report.checks:
        assert check.worst < 1e-10, check.name


def test_sampling_is_seeded(reference):
    first = sample_energies(reference, 200, seed=42)
    second = sample_energies(reference, 200, seed=42)
    other = sample_energies(reference, 200, seed=43)
    assert first == second
    assert first != other
    assert len(first) == 200


def test_sampling_avoids_degenerate_neighborhoods(reference):
    bad = set(singular_energies(reference)) | {reference.v_minus, reference.v_plus}
    for e in sample_energies(reference, 500, seed=3, e_min=1.001, e_max=12.0):
        assert 1.001 <= e <= 12.0
        assert min(abs(e - b) for b in bad) > 1e-6


def test_window_must_sit_above_threshold(reference):
    with pytest.raises(ValueError):
        sample_energies(reference, 10, seed=0, e_min=0.5)
    with pytest.raises(ValueError):
        sample_energies(reference, 10, seed=0, e_min=3.0, e_max=2.0)


def test_report_names_every_check(reference):
    report = run_verification(reference, samples=50, seed=2)
    text = report.render()
    assert text.count("PASS") == 5
    assert "all invariants hold" in text
    assert "flux" in text and "det M" in text and "boundary matching" in text


def test_failures_are_named(reference):
    report = run_verification(reference, samples=50, seed=2, tolerance=1e-22)
    assert not report.passed
    assert report.failures
    text = report.render()
    assert "FAIL" in text
    assert "FAILED:" in text
    for check in report.failures:
        assert check.name in text


def test_injected_corruption_is_pinned_to_its_invariant(reference, monkeypatch):
    def corrupted(e, cfg):
        m = full_matrix(e, cfg)
        return Matrix2x2(m.m11, m.m12 + 1e-6, m.m21, m.m22)

    monkeypatch.setattr(verify_mod, "full_matrix", corrupted)
    report = verify_mod.run_verification(reference, samples=50, seed=2)
    failed = {c.name for c in report.failures}
    assert "M12 = conj(M21)" in failed
    # flux only sees m11 and m21, so it must stay clean
    assert "flux |T|^2 + |R|^2 = 1" not in failed
    assert "FAILED:" in report.render()
