"""Basic fields d, H, D on the Dirac fiber and the four frame classes.

A frame is identified with its transition matrix from a fixed canonical
(orthonormal, chiral, self-adjoint) reference frame.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dirac import P_HAT, Q_HAT, T_HAT, PinElement, big_phi, pin_inverse
from .lorentz import P, T, SectorTag
from .numerics import DEFAULT_TOL, I4R, DomainError, lorentz_inverse, max_abs_diff
from .spintensor import FrameTransition, SpinTensor, SpinTensorType

EPS2 = np.array([[0, 1], [-1, 0]], dtype=np.complex128)

# spin metric: two skew blocks, the second one the inverse of the first
D_METRIC = np.zeros((4, 4), dtype=np.complex128)
D_METRIC[:2, :2] = EPS2
D_METRIC[2:, 2:] = np.linalg.inv(EPS2.real)

CHIRALITY = np.diag([1, 1, -1, -1]).astype(np.complex128)

DIRAC_FORM = np.zeros((4, 4), dtype=np.complex128)
DIRAC_FORM[:2, 2:] = np.eye(2)
DIRAC_FORM[2:, :2] = np.eye(2)


@dataclass(frozen=True)
class BasicFields:
    d: np.ndarray
    H: np.ndarray
    D: np.ndarray

    def as_tensors(self) -> tuple[SpinTensor, SpinTensor, SpinTensor]:
        return (
            SpinTensor(SpinTensorType(beta=2), self.d),
            SpinTensor(SpinTensorType(alpha=1, beta=1), self.H),
            SpinTensor(SpinTensorType(beta=1, gamma=1), self.D),
        )


BASIC = BasicFields(D_METRIC, CHIRALITY, DIRAC_FORM)


class FrameClass(str, enum.Enum):
    CANONICAL_CHIRAL = "CanonicalChiral"
    P_REVERSE_ANTI_CHIRAL = "PReverseAntiChiral"
    T_REVERSE_ANTI_CHIRAL = "TReverseAntiChiral"
    PT_REVERSE_CHIRAL = "PTReverseChiral"

    @property
    def signature(self) -> tuple[int, int, int]:
        """Signs (d, H, D) picked up by the basic fields."""
        return _SIGNATURES[self]

    @property
    def sector(self) -> SectorTag:
        return _SECTORS[self]

    @classmethod
    def from_signature(cls, signs) -> "FrameClass":
        try:
            return _BY_SIGNATURE[tuple(signs)]
        except KeyError:
            raise DomainError("transition not in Pin(1,3)") from None


_SIGNATURES = {
    FrameClass.CANONICAL_CHIRAL: (1, 1, 1),
    FrameClass.P_REVERSE_ANTI_CHIRAL: (-1, -1, 1),
    FrameClass.T_REVERSE_ANTI_CHIRAL: (1, -1, -1),
    FrameClass.PT_REVERSE_CHIRAL: (-1, 1, -1),
}
_BY_SIGNATURE = {v: k for k, v in _SIGNATURES.items()}
_SECTORS = {
    FrameClass.CANONICAL_CHIRAL: SectorTag.PROPER,
    FrameClass.P_REVERSE_ANTI_CHIRAL: SectorTag.P_SECTOR,
    FrameClass.T_REVERSE_ANTI_CHIRAL: SectorTag.T_SECTOR,
    FrameClass.PT_REVERSE_CHIRAL: SectorTag.MINUS_SECTOR,
}


def pair_d(x, y) -> complex:
    """Skew bilinear spin metric ``sum d_ij x^i y^j``."""
    return complex(np.asarray(x) @ D_METRIC @ np.asarray(y))


def apply_H(x) -> np.ndarray:
    return CHIRALITY @ np.asarray(x, dtype=np.complex128)


def pair_D(x, y) -> complex:
    """Hermitian Dirac form ``sum D_ij x^i conj(y^j)`` (second slot conjugated)."""
    return complex(np.asarray(x) @ DIRAC_FORM @ np.conj(np.asarray(y)))


def dirac_form_from_chiral_parts(x, y) -> complex:
    """Dirac form assembled from the chiral split of the fiber.

    With x = x1 + x2 (x1 in the first chiral half, x2 in the second, whose
    basis vectors are the conjugated dual spinor frame), this is
    ``(tau(x2), y1) + conj((tau(y2), x1))``. It is conjugate-linear in
    ``x``, so it equals ``pair_D(y, x)``.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    # tau maps x2 = x^3 psi_3 + x^4 psi_4 to the cospinor with coordinates conj(x^3), conj(x^4)
    cospinor_x2 = np.conj(x[2:])
    cospinor_y2 = np.conj(y[2:])
    return complex(cospinor_x2 @ y[:2] + np.conj(cospinor_y2 @ x[:2]))


def transform_basic_fields(f: FrameTransition) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(d~, H~, D~) contracted with the transition as in the frame-change identities."""
    s_hat, t_hat = f.s_hat, f.t_hat
    d_new = t_hat.T @ D_METRIC @ t_hat
    h_new = s_hat @ CHIRALITY @ t_hat
    dirac_new = t_hat.T @ DIRAC_FORM @ t_hat.conj()
    return d_new, h_new, dirac_new


def field_signs(f: FrameTransition, tol: float | None = None) -> tuple[int, int, int]:
    """Sign of each transformed field relative to the reference; rejects anything else."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    scale = max(1.0, float(np.max(np.abs(f.s_hat))) * float(np.max(np.abs(f.t_hat)))) ** 2
    signs = []
    for new, ref in zip(transform_basic_fields(f), (D_METRIC, CHIRALITY, DIRAC_FORM)):
        if max_abs_diff(new, ref) <= tol * scale:
            signs.append(1)
        elif max_abs_diff(new, -ref) <= tol * scale:
            signs.append(-1)
        else:
            raise DomainError("transition not in Pin(1,3)")
    return tuple(signs)


def classify_frame(f: FrameTransition | PinElement | np.ndarray, tol: float | None = None) -> FrameClass:
    """Frame class of the frame reached from the canonical one by ``f``."""
    if isinstance(f, PinElement):
        f = FrameTransition.from_pin(f)
    elif not isinstance(f, FrameTransition):
        f = FrameTransition.from_pin(PinElement.from_matrix(f, tol))
    else:
        big_phi(f.s_hat, tol)  # membership in Pin(1,3)
    return FrameClass.from_signature(field_signs(f, tol))


def classification_record(m, tol: float | None = None) -> dict:
    """Classification of a spinor transition matrix as a JSON-ready record."""
    el = PinElement.from_matrix(m, tol)
    cls = classify_frame(el, tol)
    sd, sh, sD = cls.signature
    return {"class": cls.value, "signs": {"d": sd, "H": sh, "D": sD}, "sector": el.sector.value}


def make_reversed_frame(kind: str) -> FrameTransition:
    """Transition to the P-, T- or PT-reversed frame."""
    table = {"P": (P_HAT, P), "T": (T_HAT, T), "PT": (Q_HAT, -I4R)}
    try:
        s_hat, s = table[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown reversal {kind!r}; expected P, T or PT") from None
    return FrameTransition(s_hat, pin_inverse(s_hat), s, lorentz_inverse(s))


def frame_images(f: FrameTransition) -> np.ndarray:
    """New basis vectors in old coordinates; column i is the i-th new basis vector."""
    return f.s_hat.copy()


def self_check_basic_fields() -> dict[str, float]:
    """Residuals of the structural facts about d, H and D."""
    eig_h = np.sort(np.linalg.eigvalsh(CHIRALITY))
    eig_d = np.sort(np.linalg.eigvalsh(DIRAC_FORM))
    return {
        "d_skew": max_abs_diff(D_METRIC, -D_METRIC.T),
        "d_lower_block_inverse": max_abs_diff(D_METRIC[2:, 2:] @ EPS2, np.eye(2)),
        "H_involution": max_abs_diff(CHIRALITY @ CHIRALITY, np.eye(4)),
        "H_spectrum": max_abs_diff(eig_h, np.array([-1.0, -1.0, 1.0, 1.0])),
        "D_hermitian": max_abs_diff(DIRAC_FORM, DIRAC_FORM.conj().T),
        "D_signature": max_abs_diff(eig_d, np.array([-1.0, -1.0, 1.0, 1.0])),
    }
