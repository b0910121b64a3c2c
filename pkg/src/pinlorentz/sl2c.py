"""Pauli matrices and the covering map phi: SL(2,C) -> SO+(1,3).

``phi`` evaluates the sixteen closed-form quadratic expressions in the
entries of the 2x2 matrix. ``phi_via_sigma`` rebuilds the same matrix from
``S sigma_m S^dagger`` by Pauli-basis extraction and is used as a
cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .numerics import (
    DEFAULT_TOL,
    METRIC,
    DomainError,
    InternalError,
    as_mat,
    dagger,
    det2,
    inv2_unit_det,
    l_map,
)

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)

SIGMA_TILDE = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, -1], [-1, 0]],
        [[0, 1j], [-1j, 0]],
        [[-1, 0], [0, 1]],
    ],
    dtype=np.complex128,
)

# epsilon_m = det(sigma_m)
EPSILON = np.array([1, -1, -1, -1])


@dataclass(frozen=True)
class PauliSet:
    sigma: np.ndarray
    sigma_tilde: np.ndarray
    epsilon: np.ndarray


PAULI = PauliSet(SIGMA, SIGMA_TILDE, EPSILON)


@dataclass(frozen=True, eq=False)
class SL2Element:
    """A 2x2 complex matrix with unit determinant."""

    m: np.ndarray

    def __post_init__(self):
        m = as_mat(self.m, (2, 2))
        if abs(det2(m) - 1.0) > DEFAULT_TOL.eps_float:
            raise DomainError("not in SL(2,C)")
        object.__setattr__(self, "m", m)

    def __matmul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(self.m @ other.m)

    def __neg__(self) -> "SL2Element":
        return SL2Element(-self.m)

    def inverse(self) -> "SL2Element":
        return SL2Element(inv2_unit_det(self.m))


def _as_sl2(s) -> np.ndarray:
    if isinstance(s, SL2Element):
        return s.m
    return SL2Element(s).m


def _check_real(z: np.ndarray, tol: float) -> np.ndarray:
    scale = max(1.0, float(np.max(np.abs(z.real))))
    if float(np.max(np.abs(z.imag))) > tol * scale:
        raise InternalError("imaginary residue in phi output")
    return z.real.copy()


def phi(s, tol: float | None = None) -> np.ndarray:
    """Image of ``s`` in SO+(1,3), entry by entry from the closed-form expressions."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = _as_sl2(s)
    z = _kernels.phi_batch(m[None])[0]
    return _check_real(z, tol)


def phi_batch(mats, tol: float | None = None) -> np.ndarray:
    """Vectorized ``phi`` over an ``(n, 2, 2)`` stack (determinants are not re-checked)."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    z = _kernels.phi_batch(np.asarray(mats, dtype=np.complex128))
    return _check_real(z, tol)


def pauli_coefficients(v) -> np.ndarray:
    """Coefficients of a 2x2 matrix in the basis sigma_0..sigma_3.

    Uses the pairing <A, B> = tr(A^dagger B) / 2, under which the Pauli
    matrices are orthonormal.
    """
    v = np.asarray(v, dtype=np.complex128)
    return np.array([np.trace(dagger(SIGMA[k]) @ v) / 2 for k in range(4)])


def phi_via_sigma(s) -> np.ndarray:
    m = _as_sl2(s)
    out = np.empty((4, 4))
    for col in range(4):
        c = pauli_coefficients(m @ SIGMA[col] @ dagger(m))
        # S sigma S^dagger is Hermitian, so the coefficients are real
        out[:, col] = c.real
    return out


def dual_pauli_residual(s) -> float:
    """Max residual of ``(S^-1)^dagger sigma~_m S^-1 = sum_k phi(S)^k_m sigma~_k``."""
    m = _as_sl2(s)
    big = phi(m)
    minv = inv2_unit_det(m)
    left_factor = dagger(minv)
    worst = 0.0
    for col in range(4):
        lhs = left_factor @ SIGMA_TILDE[col] @ minv
        rhs = np.einsum("k,kab->ab", big[:, col], SIGMA_TILDE)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def sigma_tilde_from_inverse() -> np.ndarray:
    """Recompute sigma~_m = eps_m sigma_m^-1 via ``A^-1 = det(A) L(A)``."""
    out = np.empty_like(SIGMA)
    for k in range(4):
        eps = det2(SIGMA[k])
        inv = eps * l_map(SIGMA[k])
        out[k] = eps * inv
    return out


def _draw(rng: np.random.Generator) -> np.ndarray:
    while True:
        z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2.0)
        d = det2(z)
        if abs(d) >= 1e-6:
            return z / np.sqrt(d)


def sample_sl2(seed: int) -> SL2Element:
    """Deterministic random SL(2,C) element for ``seed``."""
    return SL2Element(_draw(np.random.default_rng(seed)))


def sample_sl2_batch(rng: np.random.Generator, n: int) -> np.ndarray:
    """``(n, 2, 2)`` stack of random unit-determinant matrices drawn from ``rng``."""
    return np.stack([_draw(rng) for _ in range(n)]) if n else np.empty((0, 2, 2), np.complex128)


def lorentz_residuals(s) -> dict:
    """How far a real 4x4 matrix is from SO+(1,3): metric, det and time-component checks."""
    s = np.asarray(s, dtype=float)
    return {
        "metric": float(np.max(np.abs(s.T @ METRIC @ s - METRIC))),
        "det": float(abs(np.linalg.det(s) - 1.0)),
        "s00": float(s[0, 0]),
    }
