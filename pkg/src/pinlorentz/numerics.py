"""Small dense complex/real matrix helpers and the tolerance policy.

Matrices are plain numpy arrays (complex128 for Mat2C/Mat4C, float64 for
Mat4R), row-major, with the convention ``M[i, j] == M^i_j`` (upper index is
the row).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """Input lies outside the set an operation is defined on."""


class InternalError(RuntimeError):
    """A self-check failed; indicates a bug rather than bad input."""


@dataclass(frozen=True)
class Tolerance:
    eps_exact: float = 0.0
    eps_float: float = 1e-9

    def __post_init__(self):
        if not (0.0 <= self.eps_exact <= self.eps_float):
            raise ValueError("need 0 <= eps_exact <= eps_float")


DEFAULT_TOL = Tolerance()

I2 = np.eye(2, dtype=np.complex128)
I4C = np.eye(4, dtype=np.complex128)
I4R = np.eye(4)

# Minkowski metric, signature (+,-,-,-)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def as_mat(a, shape, dtype=np.complex128) -> np.ndarray:
    """Coerce ``a`` to a finite array of the given shape."""
    m = np.asarray(a, dtype=dtype)
    if m.shape != shape:
        raise ValueError(f"expected shape {shape}, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("non-finite matrix entry")
    return m


def max_abs_diff(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def approx_eq(a, b, tol: float) -> bool:
    """True iff the largest entrywise difference is at most ``tol``."""
    return max_abs_diff(a, b) <= tol


def det2(a) -> complex:
    return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])


def l_map(a) -> np.ndarray:
    """Adjugate-style swap ``[[a22, -a12], [-a21, a11]]``; linear in ``a``."""
    a = np.asarray(a)
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=np.complex128)


def inv2_unit_det(a, tol: float | None = None) -> np.ndarray:
    """Inverse of a 2x2 matrix with determinant 1."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    a = as_mat(a, (2, 2))
    if abs(det2(a) - 1.0) > tol:
        raise DomainError("not unit determinant")
    return l_map(a)


def dagger(a) -> np.ndarray:
    return np.conj(np.swapaxes(a, -1, -2))


def lorentz_inverse(s) -> np.ndarray:
    """Inverse of an O(1,3) matrix, ``g S^T g``."""
    return METRIC @ np.asarray(s).T @ METRIC


# JSON wire format: {"rows": N, "cols": N, "data": [[re, im], ...]} row-major


def matrix_to_json(m) -> dict:
    m = np.asarray(m)
    rows, cols = m.shape
    flat = m.reshape(-1).astype(np.complex128)
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj, real: bool = False) -> np.ndarray:
    """Decode the matrix wire format; raises ``ValueError`` on malformed input."""
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        data = obj["data"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from None
    if rows <= 0 or cols <= 0 or len(data) != rows * cols:
        raise ValueError("matrix data length does not match rows*cols")
    try:
        vals = np.array([complex(float(re), float(im)) for re, im in data])
    except (TypeError, ValueError):
        raise ValueError("matrix entries must be [re, im] pairs") from None
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite matrix entry")
    m = vals.reshape(rows, cols)
    if real:
        if np.any(m.imag != 0.0):
            raise ValueError("expected a real matrix")
        return m.real.copy()
    return m
