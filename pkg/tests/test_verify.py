import pytest

from pinlorentz.verify import CHECKS, round_residual, run_suite


def test_round_residual():
    assert round_residual(0.0) == 0.0
    assert round_residual(7.2e-12) == 1e-11
    assert round_residual(1e-12) == 1e-12
    assert round_residual(3e-16) == 1e-15


def test_check_names_unique():
    names = [c[0] for c in CHECKS]
    assert len(names) == len(set(names)) == 15


def test_samples_100_passes_and_is_reproducible():
    a, b = run_suite(42, samples=100), run_suite(42, samples=100)
    assert a.passed
    assert a.dumps() == b.dumps()


def test_checks_do_not_depend_on_each_other():
    full = {r.name: r for r in run_suite(7, samples=20).results}
    alone = run_suite(7, samples=20, only=["preimage_lifting"]).results
    assert len(alone) == 1
    assert alone[0].max_residual == full["preimage_lifting"].max_residual


def test_other_seeds_pass():
    for seed in (0, 1, 2):
        assert run_suite(seed, samples=50).passed


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        run_suite(42, samples=0)


def test_report_schema():
    report = run_suite(3, samples=2, only=["gamma_basis", "inversion_solver"]).to_json()
    assert set(report) == {"seed", "samples", "tolerance", "passed", "checks"}
    assert [c["name"] for c in report["checks"]] == ["gamma_basis", "inversion_solver"]
