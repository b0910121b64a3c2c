"""The fifteen acceptance criteria, one test each, at their stated tolerances.

Each test records a one-line verdict; the lines are printed in the terminal
summary (and directly when this file is run as a script).
"""
import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from pinlorentz.dirac import GAMMA
from pinlorentz.numerics import matrix_to_json
from pinlorentz.verify import CHECKS, run_suite

GOLDEN = Path(__file__).parent / "golden" / "verify_seed42.json"
VERDICTS: list[str] = []

CRITERIA = [
    (1, "phi_homomorphism", "phi homomorphism and SO+ range over 1000 pairs, 1e-9"),
    (2, "phi_pauli_cross_check", "closed form equals Pauli extraction on 500 samples, 1e-9"),
    (3, "dual_pauli_identity", "dual Pauli law on 500 samples, 1e-9; dual matrices exact"),
    (4, "gamma_anticommutation", "Clifford relation and tabulated basis, exact"),
    (5, "gamma_basis", "basis rank 16; roundtrip on 100 matrices, 1e-12"),
    (6, "inversion_solver", "inversion nullspaces are one-dimensional and derived"),
    (7, "inversion_anticommute", "P_hat T_hat anticommute, square -I, all sign choices, exact"),
    (8, "pin_homomorphism", "Pin homomorphism over 1000 pairs in all sectors; kernel +-I"),
    (9, "inversion_diagram", "inversion maps commute with phi on 500 samples, 1e-9"),
    (10, "multiplication_table", "all 16 table cells on 200 pairs each, 1e-9"),
    (11, "preimage_lifting", "lifts of 1000 Lorentz matrices, 1e-8; lifts are negatives"),
    (12, "spin_tensor_engine", "roundtrip 1e-9, loop oracle 1e-12, tau involution exact"),
    (13, "gamma_symbol_invariance", "gamma symbols: exact for inversions, 1e-9 for 200 chiral"),
    (14, "frame_classification", "sign signatures and sectors for 4 x 200 transitions"),
]


@pytest.fixture(scope="module")
def suite():
    report = run_suite(seed=42)
    return {r.name: r for r in report.results}


def _record(number, ok, text):
    VERDICTS.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")


def test_every_check_is_a_criterion():
    assert [name for name, *_ in CHECKS] == [c[1] for c in CRITERIA] + ["cli_classify"]


@pytest.mark.parametrize("number, name, text", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, name, text, suite):
    r = suite[name]
    _record(number, r.passed, f"{text}  (max residual {r.max_residual:.1e}, {r.samples} samples)")
    assert r.passed, r.detail


def _cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "pinlorentz", *args], capture_output=True,
                          text=True, cwd=cwd)


def test_criterion_15_cli(tmp_path):
    report = tmp_path / "report.json"
    verify = _cli("verify", "--seed", "42", "--json", str(report))
    golden_match = verify.returncode == 0 and report.read_bytes() == GOLDEN.read_bytes()

    gamma0 = tmp_path / "gamma0.json"
    gamma0.write_text(json.dumps(matrix_to_json(GAMMA[0])))
    classify = _cli("classify", str(gamma0))
    cls = json.loads(classify.stdout)["class"] if classify.returncode == 0 else None

    ok = golden_match and cls == "PReverseAntiChiral"
    _record(15, ok, f"verify --seed 42 matches golden: {golden_match}; classify gamma_0 -> {cls}")
    assert golden_match, verify.stdout + verify.stderr
    assert cls == "PReverseAntiChiral"


def test_golden_is_a_passing_report():
    report = json.loads(GOLDEN.read_text())
    assert report["seed"] == 42 and report["passed"]
    assert [c["name"] for c in report["checks"]] == [name for name, *_ in CHECKS]
    assert all(c["status"] == "pass" for c in report["checks"])
    assert all(set(c) == {"name", "reference", "status", "max_residual", "samples"}
               for c in report["checks"])
    assert all(np.isfinite(c["max_residual"]) for c in report["checks"])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
