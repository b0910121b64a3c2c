import numpy as np
import pytest
from hypothesis import given

from pinlorentz.numerics import I2, METRIC, DomainError
from pinlorentz.sl2c import (EPSILON, SIGMA, SIGMA_TILDE, SL2Element, lorentz_residuals, phi,
                             phi_batch, phi_via_sigma, sample_sl2, sample_sl2_batch,
                             sigma_tilde_from_inverse, dual_pauli_residual)
from strategies import sl2_matrices

Z_BOOST = np.array([[17 / 8, 0, 0, 15 / 8], [0, 1, 0, 0], [0, 0, 1, 0], [15 / 8, 0, 0, 17 / 8]])

# images computed once with exact symbolic arithmetic, solving
# S sigma_m S^dagger = sum_k c_k sigma_k as a linear system for each m
FROZEN = [
    ([[1, 1], [0, 1]],
     [[1.5, 1, 0, -0.5], [1, 1, 0, -1], [0, 0, 1, 0], [0.5, 1, 0, 0.5]]),
    ([[1, 1j], [0, 1]],
     [[1.5, 0, -1, -0.5], [0, 1, 0, 0], [-1, 0, 1, 1], [0.5, 0, -1, 0.5]]),
    ([[1 + 1j, 1], [1, 1 - 1j]],
     [[3, 2, 2, 0], [2, 1, 2, 0], [-2, -2, -1, 0], [0, 0, 0, 1]]),
    ([[np.exp(-0.25j * np.pi), 0], [0, np.exp(0.25j * np.pi)]],
     [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
]


def test_pauli_tables_exact():
    assert np.array_equal(SIGMA[1], [[0, 1], [1, 0]])
    assert np.array_equal(SIGMA[2], [[0, -1j], [1j, 0]])
    assert np.array_equal(SIGMA[3], [[1, 0], [0, -1]])
    assert np.array_equal(SIGMA_TILDE[0], I2)
    assert np.array_equal(SIGMA_TILDE[1], [[0, -1], [-1, 0]])
    assert np.array_equal(SIGMA_TILDE[2], [[0, 1j], [-1j, 0]])
    assert np.array_equal(SIGMA_TILDE[3], [[-1, 0], [0, 1]])
    assert list(EPSILON) == [1, -1, -1, -1]


def test_dual_pauli_is_signed_inverse():
    for m in range(4):
        assert np.array_equal(SIGMA_TILDE[m], EPSILON[m] * np.linalg.inv(SIGMA[m]))
    assert np.array_equal(sigma_tilde_from_inverse(), SIGMA_TILDE)


def test_phi_identity_and_kernel():
    assert np.array_equal(phi(I2), np.eye(4))
    assert np.array_equal(phi(-I2), np.eye(4))


def test_phi_z_boost():
    assert np.array_equal(phi(np.diag([2, 0.5])), Z_BOOST)
    assert np.array_equal(phi_via_sigma(np.diag([2, 0.5])), Z_BOOST)
    assert dual_pauli_residual(np.diag([2, 0.5])) <= 1e-12
    assert dual_pauli_residual(I2) == 0.0


@pytest.mark.parametrize("s, expected", FROZEN)
def test_phi_frozen_values(s, expected):
    assert np.max(np.abs(phi(np.array(s)) - np.array(expected))) <= 1e-14


def _phi_by_linear_solve(s):
    # coefficients of S sigma_m S^dagger from a 4x4 linear solve, no traces
    basis = SIGMA.reshape(4, 4).T
    out = np.empty((4, 4))
    for m in range(4):
        c = np.linalg.solve(basis, (s @ SIGMA[m] @ s.conj().T).reshape(4))
        out[:, m] = c.real
    return out


def test_phi_against_linear_solve_oracle(rng):
    for s in sample_sl2_batch(rng, 200):
        assert np.max(np.abs(phi(s) - _phi_by_linear_solve(s))) <= 1e-9


def test_phi_via_sigma_agrees(rng):
    mats = sample_sl2_batch(rng, 500)
    for s, fast in zip(mats, phi_batch(mats)):
        assert np.max(np.abs(fast - phi_via_sigma(s))) <= 1e-9
        assert dual_pauli_residual(s) <= 1e-9


def test_homomorphism_and_range(rng):
    a, b = sample_sl2_batch(rng, 1000), sample_sl2_batch(rng, 1000)
    pa, pb = phi_batch(a), phi_batch(b)
    assert np.max(np.abs(phi_batch(a @ b) - pa @ pb)) <= 1e-9
    for s in pa:
        res = lorentz_residuals(s)
        assert res["metric"] <= 1e-9 and res["det"] <= 1e-9 and res["s00"] >= 1 - 1e-9


@given(sl2_matrices(), sl2_matrices())
def test_homomorphism_property(s1, s2):
    assert np.max(np.abs(phi(s1 @ s2) - phi(s1) @ phi(s2))) <= 1e-9


@given(sl2_matrices())
def test_phi_properties(s):
    img = phi(s)
    assert np.array_equal(phi(-s), img)
    assert np.max(np.abs(img.T @ METRIC @ img - METRIC)) <= 1e-9
    # conjugate transpose upstairs is transpose downstairs
    assert np.max(np.abs(phi(s.conj().T) - img.T)) <= 1e-9


def test_sample_sl2_determinism_and_det():
    a, b = sample_sl2(0), sample_sl2(0)
    assert np.array_equal(a.m, b.m)
    for seed in range(1000):
        m = sample_sl2(seed).m
        assert abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] - 1) <= 1e-12


def test_sl2_element_validation():
    with pytest.raises(DomainError, match="not in SL"):
        SL2Element(np.diag([2.0, 1.0]))
    with pytest.raises(DomainError):
        phi(np.diag([2.0, 1.0]))
    s = SL2Element(np.diag([2, 0.5]))
    assert np.array_equal((s @ s.inverse()).m, I2)
    assert np.array_equal((-s).m, -s.m)

