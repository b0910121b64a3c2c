"""The full Lorentz group O(1,3) as four sectors over SO+(1,3)."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .numerics import DEFAULT_TOL, I4R, METRIC, DomainError, as_mat, dagger, inv2_unit_det
from .sl2c import SL2Element

P = np.diag([1.0, -1.0, -1.0, -1.0])
T = np.diag([-1.0, 1.0, 1.0, 1.0])


class SectorTag(str, enum.Enum):
    PROPER = "Proper"
    P_SECTOR = "PSector"
    T_SECTOR = "TSector"
    MINUS_SECTOR = "MinusSector"

    @property
    def factor(self) -> np.ndarray:
        return _FACTORS[self]

    @property
    def signature(self) -> tuple[int, int]:
        """(det, sign of the time-time entry)."""
        return _SIGNATURES[self]

    def __mul__(self, other: "SectorTag") -> "SectorTag":
        # Klein four-group {I, P, T, -I}
        return _KLEIN[(self, other)]


_FACTORS = {
    SectorTag.PROPER: I4R,
    SectorTag.P_SECTOR: P,
    SectorTag.T_SECTOR: T,
    SectorTag.MINUS_SECTOR: -I4R,
}
_SIGNATURES = {
    SectorTag.PROPER: (1, 1),
    SectorTag.P_SECTOR: (-1, 1),
    SectorTag.T_SECTOR: (-1, -1),
    SectorTag.MINUS_SECTOR: (1, -1),
}
_BY_SIGNATURE = {v: k for k, v in _SIGNATURES.items()}
_KLEIN = {
    (a, b): _BY_SIGNATURE[(sa[0] * sb[0], sa[1] * sb[1])]
    for a, sa in _SIGNATURES.items()
    for b, sb in _SIGNATURES.items()
}

_I, _P, _T, _M = (SectorTag.PROPER, SectorTag.P_SECTOR, SectorTag.T_SECTOR, SectorTag.MINUS_SECTOR)

# (left tag, right tag) -> (product tag, whether the left proper part is
# conjugated by P before multiplying). Mirrors the reduced O(1,3) table.
MULTIPLICATION_TABLE: dict[tuple[SectorTag, SectorTag], tuple[SectorTag, bool]] = {
    (_I, _I): (_I, False), (_I, _P): (_P, True), (_I, _T): (_T, True), (_I, _M): (_M, False),
    (_P, _I): (_P, False), (_P, _P): (_I, True), (_P, _T): (_M, True), (_P, _M): (_T, False),
    (_T, _I): (_T, False), (_T, _P): (_M, True), (_T, _T): (_I, True), (_T, _M): (_P, False),
    (_M, _I): (_M, False), (_M, _P): (_T, True), (_M, _T): (_P, True), (_M, _M): (_I, False),
}


def _scaled_tol(m: np.ndarray, tol: float) -> float:
    return tol * max(1.0, float(np.max(np.abs(m))) ** 2)


def is_lorentzian(m, tol: float | None = None) -> bool:
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m.T @ METRIC @ m - METRIC))) <= _scaled_tol(m, tol)


def is_proper_orthochronous(m, tol: float | None = None) -> bool:
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = np.asarray(m, dtype=float)
    return (
        is_lorentzian(m, tol)
        and abs(np.linalg.det(m) - 1.0) <= _scaled_tol(m, tol)
        and m[0, 0] >= 1.0 - tol
    )


@dataclass(frozen=True, eq=False)
class LorentzElement:
    """An O(1,3) matrix with its sector tag and SO+ part, ``m = tag.factor @ proper_part``."""

    m: np.ndarray
    tag: SectorTag
    proper_part: np.ndarray

    def __matmul__(self, other: "LorentzElement") -> "LorentzElement":
        return mul(self, other)

    @property
    def factor(self) -> np.ndarray:
        return self.tag.factor

    @classmethod
    def from_parts(cls, tag: SectorTag, proper_part) -> "LorentzElement":
        s = as_mat(proper_part, (4, 4), float)
        return cls(tag.factor @ s, tag, s)


def decompose(m, tol: float | None = None) -> LorentzElement:
    """Split an O(1,3) matrix into its sector and its SO+(1,3) part."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = as_mat(m, (4, 4), float)
    if not is_lorentzian(m, tol):
        raise DomainError("not in O(1,3)")
    det_sign = 1 if np.linalg.det(m) > 0 else -1
    # valid input has |m00| >= 1, so the sign is never ambiguous
    time_sign = 1 if m[0, 0] > 0 else -1
    tag = _BY_SIGNATURE[(det_sign, time_sign)]
    proper = tag.factor @ m  # every factor is its own inverse
    return LorentzElement(m, tag, proper)


def mul(a: LorentzElement, b: LorentzElement) -> LorentzElement:
    """Product computed in SO+(1,3) through the reduced sector table."""
    tag, conjugate = MULTIPLICATION_TABLE[(a.tag, b.tag)]
    s1 = psi(a.proper_part, check=False) if conjugate else a.proper_part
    return LorentzElement.from_parts(tag, s1 @ b.proper_part)


def psi(s, check: bool = True, tol: float | None = None) -> np.ndarray:
    """Conjugation by spatial inversion, ``P S P``."""
    s = as_mat(s, (4, 4), float)
    if check and not is_proper_orthochronous(s, tol):
        raise DomainError("not in SO+(1,3)")
    return P @ s @ P


def psi_prime(s) -> SL2Element:
    """``(S^-1)^dagger`` on SL(2,C)."""
    m = s.m if isinstance(s, SL2Element) else SL2Element(s).m
    return SL2Element(dagger(inv2_unit_det(m)))
