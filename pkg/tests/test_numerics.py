import json

import numpy as np
import pytest
from hypothesis import given

from pinlorentz.dirac import GAMMA
from pinlorentz.numerics import (DEFAULT_TOL, I2, I4C, DomainError, Tolerance, approx_eq, det2,
                                 dagger, inv2_unit_det, l_map, lorentz_inverse, matrix_from_json,
                                 matrix_to_json)
from pinlorentz.sl2c import SIGMA, SIGMA_TILDE, sample_sl2_batch
from strategies import complex_entry, sl2_matrices


def test_default_tolerance():
    assert DEFAULT_TOL.eps_exact == 0.0
    assert DEFAULT_TOL.eps_float == 1e-9
    with pytest.raises(ValueError):
        Tolerance(eps_float=-1.0)


def test_approx_eq_examples():
    assert approx_eq(I4C, I4C, 0)
    nudged = GAMMA[0].copy()
    nudged[0, 0] += 1e-12
    assert approx_eq(GAMMA[0], nudged, 1e-9)
    assert not approx_eq(GAMMA[0], GAMMA[1], 1e-9)


def test_inv2_examples():
    assert np.array_equal(inv2_unit_det(I2), I2)
    assert np.array_equal(inv2_unit_det(np.array([[1, 1], [0, 1]])), [[1, -1], [0, 1]])
    assert np.array_equal(inv2_unit_det(np.diag([2, 0.5])), np.diag([0.5, 2]))
    with pytest.raises(DomainError):
        inv2_unit_det(np.diag([2.0, 1.0]))


def test_l_map_examples():
    assert np.array_equal(l_map(I2), I2)
    assert np.array_equal(l_map(SIGMA[1]), [[0, -1], [-1, 0]])
    assert np.array_equal(l_map(SIGMA[1]), SIGMA_TILDE[1])
    assert np.array_equal(l_map(np.zeros((2, 2))), np.zeros((2, 2)))


def test_l_map_linear_exact():
    a = np.array([[1 + 2j, -1], [2j, 3]])
    b = np.array([[0, 1j], [-2, 1 - 1j]])
    alpha, beta = 2 - 1j, -1j
    assert np.array_equal(l_map(alpha * a + beta * b), alpha * l_map(a) + beta * l_map(b))


def test_inverse_from_l_map(rng):
    for _ in range(500):
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        d = det2(a)
        a = a / np.sqrt(d) if rng.random() < 0.5 else a / np.sqrt(-d)  # det +1 or -1
        assert np.max(np.abs(np.linalg.inv(a) - det2(a) * l_map(a))) <= 1e-9


def test_inv2_unit_det_samples(rng):
    for s in sample_sl2_batch(rng, 500):
        assert np.max(np.abs(inv2_unit_det(s) @ s - I2)) <= 1e-9


@given(sl2_matrices())
def test_inv2_property(s):
    assert np.max(np.abs(s @ inv2_unit_det(s) - I2)) <= 1e-9


@given(complex_entry, complex_entry)
def test_dagger_involution(x, y):
    m = np.array([[x, y], [y, x]])
    assert np.array_equal(dagger(dagger(m)), m)


def test_lorentz_inverse():
    boost = np.array([[17 / 8, 0, 0, 15 / 8], [0, 1, 0, 0], [0, 0, 1, 0], [15 / 8, 0, 0, 17 / 8]])
    assert np.allclose(lorentz_inverse(boost) @ boost, np.eye(4), atol=1e-12)


def test_matrix_json_roundtrip():
    m = np.array([[1 + 2j, -0.5], [3j, 4]])
    obj = json.loads(json.dumps(matrix_to_json(m)))
    assert obj["rows"] == 2 and obj["cols"] == 2
    assert np.array_equal(matrix_from_json(obj), m)
    assert np.array_equal(matrix_from_json(matrix_to_json(np.eye(2)), real=True), np.eye(2))


@pytest.mark.parametrize("obj", [
    {"rows": 2, "cols": 2, "data": [[1, 0]] * 3},
    {"rows": 2, "data": []},
    {"rows": 1, "cols": 1, "data": [["x", 0]]},
    {"rows": 1, "cols": 1, "data": [[float("nan"), 0]]},
    [1, 2, 3],
])
def test_matrix_json_malformed(obj):
    with pytest.raises(ValueError):
        matrix_from_json(obj)


def test_matrix_json_real_rejects_imaginary():
    with pytest.raises(ValueError):
        matrix_from_json(matrix_to_json(np.array([[1j]])), real=True)
