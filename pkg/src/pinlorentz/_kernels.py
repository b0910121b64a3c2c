"""Hot kernels with a numba path and a pure-numpy fallback.

Set ``PINLORENTZ_NO_JIT=1`` to force the numpy path (also used when numba
cannot be imported). The two paths agree to a few ulps; numpy's SIMD
complex multiply may fuse operations that the compiled loop keeps separate.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

USE_JIT = _HAVE_NUMBA and os.environ.get("PINLORENTZ_NO_JIT", "") not in ("1", "true", "yes")


def _phi_entries(a, b, c, d):
    # a = S^1_1, b = S^1_2, c = S^2_1, d = S^2_2; works on scalars or arrays
    ca = np.conj(a)
    cb = np.conj(b)
    cc = np.conj(c)
    cd = np.conj(d)
    h = 0.5
    hi = -0.5j  # 1/(2i)
    s00 = (ca * a + cb * b + cc * c + cd * d) * h
    s01 = (ca * b + cb * a + cc * d + cd * c) * h
    s02 = (cb * a - ca * b + cd * c - cc * d) * hi
    s03 = (ca * a - cb * b + cc * c - cd * d) * h
    s10 = (cc * a + ca * c + cd * b + cb * d) * h
    s11 = (cc * b + cb * c + cd * a + ca * d) * h
    s12 = (cb * c - cc * b + cd * a - ca * d) * hi
    s13 = (cc * a + ca * c - cd * b - cb * d) * h
    s20 = (ca * c - cc * a + cb * d - cd * b) * hi
    s21 = (cb * c - cc * b + ca * d - cd * a) * hi
    s22 = (cd * a + ca * d - cc * b - cb * c) * h
    s23 = (ca * c - cc * a + cd * b - cb * d) * hi
    s30 = (ca * a + cb * b - cc * c - cd * d) * h
    s31 = (ca * b + cb * a - cc * d - cd * c) * h
    s32 = (cb * a - ca * b + cc * d - cd * c) * hi
    s33 = (ca * a + cd * d - cc * c - cb * b) * h
    return (s00, s01, s02, s03, s10, s11, s12, s13,
            s20, s21, s22, s23, s30, s31, s32, s33)


def _phi_batch_numpy(mats):
    e = _phi_entries(mats[:, 0, 0], mats[:, 0, 1], mats[:, 1, 0], mats[:, 1, 1])
    return np.stack(e, axis=-1).reshape(mats.shape[0], 4, 4)


def _contract_axis_numpy(x3, m):
    # out[p, i, q] = sum_a m[i, a] * x3[p, a, q]
    return np.einsum("ia,paq->piq", m, x3)


if USE_JIT:
    _phi_entries_jit = njit(cache=True)(_phi_entries)

    @njit(cache=True)
    def _phi_batch_jit(mats):
        n = mats.shape[0]
        out = np.empty((n, 4, 4), dtype=np.complex128)
        for t in range(n):
            e = _phi_entries_jit(mats[t, 0, 0], mats[t, 0, 1], mats[t, 1, 0], mats[t, 1, 1])
            for k in range(16):
                out[t, k // 4, k % 4] = e[k]
        return out

    @njit(cache=True)
    def _contract_axis_jit(x3, m):
        npre, dim, npost = x3.shape
        nout = m.shape[0]
        out = np.zeros((npre, nout, npost), dtype=np.complex128)
        for p in range(npre):
            for i in range(nout):
                for a in range(dim):
                    w = m[i, a]
                    if w == 0:
                        continue
                    for q in range(npost):
                        out[p, i, q] += w * x3[p, a, q]
        return out


def phi_batch(mats: np.ndarray, jit: bool | None = None) -> np.ndarray:
    """Complex 4x4 images of a stack of 2x2 matrices (imaginary parts are residue)."""
    mats = np.ascontiguousarray(mats, dtype=np.complex128)
    if (USE_JIT if jit is None else jit and USE_JIT):
        return _phi_batch_jit(mats)
    return _phi_batch_numpy(mats)


def contract_axis(x: np.ndarray, m: np.ndarray, axis: int, jit: bool | None = None) -> np.ndarray:
    """Apply ``m`` to one axis of ``x``: ``out[..i..] = sum_a m[i, a] x[..a..]``."""
    x = np.asarray(x, dtype=np.complex128)
    m = np.ascontiguousarray(m, dtype=np.complex128)
    shape = x.shape
    npre = int(np.prod(shape[:axis], dtype=np.int64))
    npost = int(np.prod(shape[axis + 1:], dtype=np.int64))
    x3 = np.ascontiguousarray(x.reshape(npre, shape[axis], npost))
    if (USE_JIT if jit is None else jit and USE_JIT):
        out = _contract_axis_jit(x3, m)
    else:
        out = _contract_axis_numpy(x3, m)
    return out.reshape(shape[:axis] + (m.shape[0],) + shape[axis + 1:])
