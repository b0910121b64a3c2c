"""Dirac spin-tensors of type (alpha, beta | nu, gamma | m, n) over one fiber pair.

Component arrays have one axis per index, ordered

    (contravariant Dirac) (covariant Dirac) (barred contravariant)
    (barred covariant) (tangent) (cotangent)

and every axis has length 4 (Dirac indices 1..4 and tangent indices 0..3
both map to array positions 0..3).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import _kernels
from .dirac import GAMMA, P_HAT, Q_HAT, T_HAT, PinElement, embed_matrix
from .lorentz import P, T
from .numerics import DEFAULT_TOL, I4C, I4R, DomainError, as_mat, lorentz_inverse, max_abs_diff

MAX_ORDER = 6


@dataclass(frozen=True)
class SpinTensorType:
    alpha: int = 0
    beta: int = 0
    nu: int = 0
    gamma: int = 0
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if min(self.counts) < 0:
            raise ValueError("index counts must be non-negative")
        if self.order > MAX_ORDER:
            raise ValueError(f"total order {self.order} exceeds cap {MAX_ORDER}")

    @property
    def counts(self) -> tuple[int, int, int, int, int, int]:
        return (self.alpha, self.beta, self.nu, self.gamma, self.m, self.n)

    @property
    def order(self) -> int:
        return sum(self.counts)

    @property
    def shape(self) -> tuple[int, ...]:
        return (4,) * self.order

    def conjugate(self) -> "SpinTensorType":
        return SpinTensorType(self.nu, self.gamma, self.alpha, self.beta, self.m, self.n)

    def __str__(self) -> str:
        a, b, nu, g, m, n = self.counts
        return f"({a},{b}|{nu},{g}|{m},{n})"


@dataclass(frozen=True, eq=False)
class SpinTensor:
    ttype: SpinTensorType
    components: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.components, dtype=np.complex128)
        if c.shape != self.ttype.shape:
            raise ValueError(f"components shape {c.shape} does not match type {self.ttype}")
        if not np.all(np.isfinite(c)):
            raise DomainError("non-finite spin-tensor component")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "components", c)

    @classmethod
    def zeros(cls, ttype: SpinTensorType) -> "SpinTensor":
        return cls(ttype, np.zeros(ttype.shape, dtype=np.complex128))

    @classmethod
    def random(cls, ttype: SpinTensorType, rng: np.random.Generator) -> "SpinTensor":
        shape = ttype.shape
        return cls(ttype, rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


@dataclass(frozen=True, eq=False)
class FrameTransition:
    """Spinor transition ``s_hat`` and tangent transition ``s`` with their inverses."""

    s_hat: np.ndarray
    t_hat: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        for name, dtype in (("s_hat", complex), ("t_hat", complex), ("s", float), ("t", float)):
            object.__setattr__(self, name, as_mat(getattr(self, name), (4, 4), dtype))
        tol = DEFAULT_TOL.eps_float
        scale_hat = max(1.0, float(np.max(np.abs(self.s_hat))) * float(np.max(np.abs(self.t_hat))))
        scale = max(1.0, float(np.max(np.abs(self.s))) * float(np.max(np.abs(self.t))))
        if max_abs_diff(self.s_hat @ self.t_hat, I4C) > tol * scale_hat:
            raise DomainError("t_hat is not the inverse of s_hat")
        if max_abs_diff(self.s @ self.t, I4R) > tol * scale:
            raise DomainError("t is not the inverse of s")

    @classmethod
    def identity(cls) -> "FrameTransition":
        return cls(I4C, I4C, I4R, I4R)

    @classmethod
    def from_matrices(cls, s_hat, s, t_hat=None, t=None) -> "FrameTransition":
        s_hat = as_mat(s_hat, (4, 4))
        s = as_mat(s, (4, 4), float)
        t_hat = np.linalg.inv(s_hat) if t_hat is None else t_hat
        t = np.linalg.inv(s) if t is None else t
        return cls(s_hat, t_hat, s, t)

    @classmethod
    def from_pin(cls, el: PinElement) -> "FrameTransition":
        s = el.image.m
        return cls(el.m, el.inverse().m, s, lorentz_inverse(s))

    def then(self, other: "FrameTransition") -> "FrameTransition":
        """Transition equal to applying ``self`` first and ``other`` second."""
        return FrameTransition(
            self.s_hat @ other.s_hat, other.t_hat @ self.t_hat, self.s @ other.s, other.t @ self.t
        )

    def conjugate(self) -> "FrameTransition":
        return FrameTransition(self.s_hat.conj(), self.t_hat.conj(), self.s, self.t)


def _slot_matrices(f: FrameTransition, inverse: bool) -> tuple[np.ndarray, ...]:
    s_hat, t_hat, s, t = (f.t_hat, f.s_hat, f.t, f.s) if inverse else (f.s_hat, f.t_hat, f.s, f.t)
    # each matrix M acts as out[.., i, ..] = sum_a M[i, a] x[.., a, ..]
    return (
        t_hat,            # contravariant Dirac
        s_hat.T,          # covariant Dirac
        t_hat.conj(),     # barred contravariant
        s_hat.conj().T,   # barred covariant
        t.astype(complex),
        s.T.astype(complex),
    )


def _apply(x: SpinTensor, mats, jit: bool | None = None) -> SpinTensor:
    out = np.array(x.components)
    axis = 0
    for count, mat in zip(x.ttype.counts, mats):
        for _ in range(count):
            out = _kernels.contract_axis(out, mat, axis, jit=jit)
            axis += 1
    return SpinTensor(x.ttype, out)


def transform(x: SpinTensor, f: FrameTransition, jit: bool | None = None) -> SpinTensor:
    """Components of ``x`` in the new frame pair reached by ``f``."""
    return _apply(x, _slot_matrices(f, inverse=False), jit)


def inverse_transform(x: SpinTensor, f: FrameTransition, jit: bool | None = None) -> SpinTensor:
    """Old-frame components from new-frame components (undoes ``transform``)."""
    return _apply(x, _slot_matrices(f, inverse=True), jit)


def tau(x: SpinTensor) -> SpinTensor:
    """Complex conjugation exchanging the barred and unbarred index groups."""
    a, b, nu, g, m, n = x.ttype.counts
    groups = np.split(np.arange(x.ttype.order), np.cumsum([a, b, nu, g, m])[:5])
    perm = np.concatenate([groups[2], groups[3], groups[0], groups[1], groups[4], groups[5]])
    comps = np.conj(np.transpose(x.components, perm.astype(int)))
    return SpinTensor(x.ttype.conjugate(), comps)


# -- gamma symbols -------------------------------------------------------------

GAMMA_SYMBOL_TYPE = SpinTensorType(alpha=1, beta=1, n=1)


def gamma_symbols() -> SpinTensor:
    """The tensor whose component (i, j, k) is entry (i, j) of gamma_k."""
    return SpinTensor(GAMMA_SYMBOL_TYPE, np.transpose(GAMMA, (1, 2, 0)))


def _is_embedded(s_hat: np.ndarray, tol: float) -> bool:
    if max(np.max(np.abs(s_hat[:2, 2:])), np.max(np.abs(s_hat[2:, :2]))) > tol:
        return False
    try:
        return max_abs_diff(embed_matrix(s_hat[:2, :2]), s_hat) <= tol
    except DomainError:
        return False


def gamma_symbol_invariance(f: FrameTransition, sign: int = 1, tol: float | None = None) -> float:
    """Max residual of ``g^i_jk - sign * sum S^i_r X^s_j T^m_k g^r_sm``.

    ``X`` is the inverse spinor transition for embedded chiral transitions.
    For the three discrete operators the lower Dirac slot carries the
    operator itself, as in the inversion-frame identities; this is what
    brings in the minus sign for ``Q_hat`` (whose inverse is ``-Q_hat``).
    """
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    discrete = {"P": (P_HAT, P), "T": (T_HAT, T), "PT": (Q_HAT, -I4R)}
    lower = None
    for op, lor in discrete.values():
        if max_abs_diff(f.s_hat, op) == 0.0 and max_abs_diff(f.s, lor) == 0.0:
            lower = op
            break
    if lower is None:
        if not _is_embedded(f.s_hat, tol):
            raise DomainError("unsupported transition for the gamma-symbol identity")
        lower = f.t_hat
    g = gamma_symbols().components
    rhs = np.einsum("ir,sj,mk,rsm->ijk", f.s_hat, lower, f.t, g)
    return float(np.max(np.abs(g - sign * rhs)))


# -- JSON wire format ----------------------------------------------------------


def tensor_to_json(x: SpinTensor) -> dict:
    flat = x.components.reshape(-1)
    return {
        "type": list(x.ttype.counts),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def tensor_from_json(obj) -> SpinTensor:
    try:
        counts = [int(c) for c in obj["type"]]
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed tensor object: {exc}") from None
    if len(counts) != 6:
        raise ValueError("tensor type must have six counts")
    ttype = SpinTensorType(*counts)
    if len(data) != 4 ** ttype.order:
        raise ValueError(f"type {ttype} needs {4 ** ttype.order} components, got {len(data)}")
    try:
        vals = np.array([complex(float(re), float(im)) for re, im in data])
    except (TypeError, ValueError):
        raise ValueError("tensor entries must be [re, im] pairs") from None
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite tensor component")
    return SpinTensor(ttype, vals.reshape(ttype.shape))


# -- reference contraction -------------------------------------------------------


def transform_reference(x: SpinTensor, f: FrameTransition, inverse: bool = False) -> SpinTensor:
    """Term-by-term evaluation of the transformation rule with explicit loops.

    Independent of the axis-by-axis engine; cost is
    ``4**order * (number of nonzero input components)``, so it is meant for
    small or sparse tensors.
    """
    mats = _slot_matrices(f, inverse)
    slot_of_axis = [mats[g] for g, count in enumerate(x.ttype.counts) for _ in range(count)]
    order = x.ttype.order
    comps = x.components
    nonzero = [idx for idx in np.ndindex(comps.shape) if comps[idx] != 0]
    out = np.zeros(x.ttype.shape, dtype=np.complex128)
    for out_idx in product(range(4), repeat=order):
        acc = 0j
        for in_idx in nonzero:
            term = comps[in_idx]
            for ax in range(order):
                term *= slot_of_axis[ax][out_idx[ax], in_idx[ax]]
                if term == 0:
                    break
            acc += term
        out[out_idx] = acc
    return SpinTensor(x.ttype, out)
