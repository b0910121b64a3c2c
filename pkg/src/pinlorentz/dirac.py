"""Dirac gamma algebra, the Pin(1,3) matrix group and its map onto O(1,3).

The inversion operators are not typed in by hand: ``solve_inversion_equation``
sets up the homogeneous system ``X gamma_m = (sum_k L^k_m gamma_k) X`` for
``L`` in {P, T}, finds its nullspace by elimination, and
``normalize_inversion`` fixes the scale by ``X^2 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lorentz import P, T, LorentzElement, SectorTag, decompose
from .numerics import (
    DEFAULT_TOL,
    I4C,
    METRIC,
    DomainError,
    InternalError,
    as_mat,
    dagger,
    inv2_unit_det,
    max_abs_diff,
)
from .sl2c import SIGMA, SIGMA_TILDE, SL2Element, phi, phi_batch, sample_sl2_batch

NULL_THRESHOLD = 1e-10


def _block(upper_right, lower_left) -> np.ndarray:
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, 2:] = upper_right
    out[2:, :2] = lower_left
    return out


GAMMA = np.stack([_block(SIGMA[m], SIGMA_TILDE[m]) for m in range(4)])

# index tuples of the 16 basis products, in the order
# 1, g0g1g2g3, g0, g1g2g3, g1, g0g2g3, g2, g0g1g3, g3, g0g1g2,
# g0g1, g2g3, g0g2, g1g3, g0g3, g1g2
BASIS16_LABELS: tuple[tuple[int, ...], ...] = (
    (), (0, 1, 2, 3),
    (0,), (1, 2, 3),
    (1,), (0, 2, 3),
    (2,), (0, 1, 3),
    (3,), (0, 1, 2),
    (0, 1), (2, 3),
    (0, 2), (1, 3),
    (0, 3), (1, 2),
)
GAMMA_SLOTS = (2, 4, 6, 8)  # positions of gamma_0..gamma_3 in BASIS16


def gamma_product(indices) -> np.ndarray:
    out = I4C.copy()
    for k in indices:
        out = out @ GAMMA[k]
    return out


BASIS16 = np.stack([gamma_product(lbl) for lbl in BASIS16_LABELS])


def basis_label(i: int) -> str:
    lbl = BASIS16_LABELS[i]
    return "1" if not lbl else "".join(f"g{k}" for k in lbl)


def _gram(basis: np.ndarray) -> np.ndarray:
    # <A, B> = tr(A^dagger B) / 4
    return np.einsum("aji,bji->ab", basis.conj(), basis) / 4


GRAM16 = _gram(BASIS16)


def anticommutator_residual() -> float:
    """Largest entry of ``g_i g_j + g_j g_i - 2 g_ij 1`` over all 16 index pairs."""
    worst = 0.0
    for i in range(4):
        for j in range(4):
            ac = GAMMA[i] @ GAMMA[j] + GAMMA[j] @ GAMMA[i]
            worst = max(worst, max_abs_diff(ac, 2 * METRIC[i, j] * I4C))
    return worst


if anticommutator_residual() != 0.0:  # pragma: no cover
    raise InternalError("gamma matrices fail the anticommutation relation")
if abs(np.linalg.det(GRAM16)) < 1e-6:  # pragma: no cover
    raise InternalError("gamma basis is degenerate")


def decompose_in_basis16(m) -> np.ndarray:
    """Complex coefficients ``c`` with ``sum_i c_i BASIS16[i] == m``."""
    m = as_mat(m, (4, 4))
    rhs = np.einsum("aji,ji->a", BASIS16.conj(), m) / 4
    return np.linalg.solve(GRAM16, rhs)


def compose_basis16(coeffs) -> np.ndarray:
    return np.einsum("a,aij->ij", np.asarray(coeffs, dtype=np.complex128), BASIS16)


# -- nullspace of a small dense homogeneous system ---------------------------


def rref(a: np.ndarray, threshold: float = NULL_THRESHOLD) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with partial pivoting. Returns (R, pivot columns)."""
    r = np.array(a, dtype=float)
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        best = row + int(np.argmax(np.abs(r[row:, col])))
        if abs(r[best, col]) <= threshold:
            r[row:, col] = 0.0
            continue
        r[[row, best]] = r[[best, row]]
        r[row] /= r[row, col]
        others = np.arange(nrows) != row
        r[others] -= np.outer(r[others, col], r[row])
        pivots.append(col)
        row += 1
    return r, pivots


def nullspace(a: np.ndarray, threshold: float = NULL_THRESHOLD) -> np.ndarray:
    """Basis of the right nullspace of a real matrix, one vector per column."""
    r, pivots = rref(a, threshold)
    ncols = r.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((ncols, len(free)))
    for j, f in enumerate(free):
        basis[f, j] = 1.0
        for i, pc in enumerate(pivots):
            basis[pc, j] = -r[i, f]
    return basis


def inversion_system(target) -> np.ndarray:
    """The 64 x 16 complex coefficient matrix of ``X g_m - (sum_k L^k_m g_k) X = 0``.

    Unknowns are the entries of X in row-major order.
    """
    target = as_mat(target, (4, 4), float)
    rhs_gammas = [np.einsum("k,kij->ij", target[:, m], GAMMA) for m in range(4)]
    cols = []
    for u in range(16):
        e = np.zeros(16, dtype=np.complex128)
        e[u] = 1.0
        x = e.reshape(4, 4)
        rows = [x @ GAMMA[m] - rhs_gammas[m] @ x for m in range(4)]
        cols.append(np.concatenate([r.reshape(-1) for r in rows]))
    return np.stack(cols, axis=1)


def complex_nullspace(a: np.ndarray, threshold: float = NULL_THRESHOLD) -> np.ndarray:
    """Complex nullspace via the real system ``[[Re, -Im], [Im, Re]]``.

    A complex line shows up as a 2-dimensional real nullspace (v and iv);
    returns one complex vector per complex dimension.
    """
    n = a.shape[1]
    big = np.block([[a.real, -a.imag], [a.imag, a.real]])
    real_basis = nullspace(big, threshold)
    cand = real_basis[:n] + 1j * real_basis[n:]
    # pick a maximal complex-independent subset
    chosen: list[np.ndarray] = []
    for j in range(cand.shape[1]):
        v = cand[:, j]
        if chosen:
            q = np.stack(chosen, axis=1)
            v = v - q @ np.linalg.lstsq(q, v, rcond=None)[0]
        if np.linalg.norm(v) > threshold:
            chosen.append(v / np.linalg.norm(v))
    if not chosen:
        return np.zeros((n, 0), dtype=np.complex128)
    return np.stack(chosen, axis=1)


def solve_inversion_equation(target) -> list[np.ndarray]:
    """Nullspace basis (as 4x4 matrices) of the inversion equation for ``target``."""
    basis = complex_nullspace(inversion_system(target))
    if basis.shape[1] != 1:
        raise InternalError(f"inversion nullspace has dimension {basis.shape[1]}, expected 1")
    return [basis[:, j].reshape(4, 4) for j in range(basis.shape[1])]


def normalize_inversion(x, sign: int = 1, tol: float | None = None) -> np.ndarray:
    """Rescale ``x`` so that its square is the identity.

    The overall sign is fixed by making the dominant gamma-basis
    coefficient positive (or positive imaginary), then multiplied by ``sign``.
    """
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x = as_mat(x, (4, 4))
    sq = x @ x
    lam = sq[0, 0]
    if abs(lam) <= tol or max_abs_diff(sq, lam * I4C) > tol * max(1.0, abs(lam)):
        raise DomainError("square is not a nonzero multiple of the identity")
    y = x / np.sqrt(lam)
    c = decompose_in_basis16(y)
    lead = c[int(np.argmax(np.abs(c)))]
    ref = lead.real if abs(lead.real) > abs(lead.imag) else lead.imag
    if ref < 0:
        y = -y
    y = sign * y
    # snap to exact values when the result is a signed basis element
    snapped = np.round(y.real) + 1j * np.round(y.imag)
    if max_abs_diff(snapped, y) <= tol:
        y = snapped
    return y


def derive_inversion_ops(sign_p: int = 1, sign_t: int = 1) -> tuple[np.ndarray, np.ndarray]:
    p_hat = normalize_inversion(solve_inversion_equation(P)[0], sign_p)
    t_hat = normalize_inversion(solve_inversion_equation(T)[0], sign_t)
    return p_hat, t_hat


@dataclass(frozen=True)
class InversionOps:
    P_hat: np.ndarray
    T_hat: np.ndarray
    Q_hat: np.ndarray


def _build_inversion_ops() -> InversionOps:
    p_hat, t_hat = derive_inversion_ops(1, 1)
    q_hat = p_hat @ t_hat
    expected_q = np.diag([1j, 1j, -1j, -1j])
    if max_abs_diff(q_hat, expected_q) != 0.0:  # pragma: no cover
        raise InternalError("P_hat T_hat does not match diag(i, i, -i, -i)")
    return InversionOps(p_hat, t_hat, q_hat)


INVERSION = _build_inversion_ops()
P_HAT, T_HAT, Q_HAT = INVERSION.P_hat, INVERSION.T_hat, INVERSION.Q_hat

SECTOR_LIFTS = {
    SectorTag.PROPER: I4C,
    SectorTag.P_SECTOR: P_HAT,
    SectorTag.T_SECTOR: T_HAT,
    SectorTag.MINUS_SECTOR: Q_HAT,
}


# -- Pin(1,3) ------------------------------------------------------------------


def embed_matrix(s) -> np.ndarray:
    """``diag(S, (S^-1)^dagger)`` for a unit-determinant 2x2 ``S``."""
    m = s.m if isinstance(s, SL2Element) else SL2Element(s).m
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, :2] = m
    out[2:, 2:] = dagger(inv2_unit_det(m))
    return out


def pin_inverse(m, tol: float | None = None) -> np.ndarray:
    """Inverse of a Pin element from ``m^dagger g0 m = +-g0``."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = as_mat(m, (4, 4))
    g0 = GAMMA[0]
    form = dagger(m) @ g0 @ m
    scale = max(1.0, float(np.max(np.abs(m))) ** 2)
    for eps in (1, -1):
        if max_abs_diff(form, eps * g0) <= tol * scale:
            return eps * (g0 @ dagger(m) @ g0)
    raise DomainError("not in Pin(1,3) representation")


def big_phi(m, tol: float | None = None) -> LorentzElement:
    """O(1,3) image read off from ``m g_k m^-1 = sum_j S^j_k g_j``."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    m = as_mat(m, (4, 4))
    minv = pin_inverse(m, tol)
    if max_abs_diff(m @ minv, I4C) > tol * max(1.0, float(np.max(np.abs(m))) ** 2):
        raise DomainError("not in Pin(1,3) representation")
    s = np.empty((4, 4))
    for k in range(4):
        c = decompose_in_basis16(m @ GAMMA[k] @ minv)
        scale = max(1.0, float(np.max(np.abs(c))))
        off_span = np.delete(c, GAMMA_SLOTS)
        coeffs = c[list(GAMMA_SLOTS)]
        if np.max(np.abs(off_span)) > tol * scale or np.max(np.abs(coeffs.imag)) > tol * scale:
            raise DomainError("not in Pin(1,3) representation")
        s[:, k] = coeffs.real
    return decompose(s, tol)


@dataclass(frozen=True, eq=False)
class PinElement:
    m: np.ndarray
    sector: SectorTag
    image: LorentzElement

    @classmethod
    def from_matrix(cls, m, tol: float | None = None) -> "PinElement":
        img = big_phi(m, tol)
        return cls(np.asarray(m, dtype=np.complex128), img.tag, img)

    def __matmul__(self, other: "PinElement") -> "PinElement":
        return pin_mul(self, other)

    def __neg__(self) -> "PinElement":
        return PinElement(-self.m, self.sector, self.image)

    def inverse(self) -> "PinElement":
        return PinElement.from_matrix(pin_inverse(self.m))


def embed_sl2(s) -> PinElement:
    return PinElement.from_matrix(embed_matrix(s))


def pin_mul(a: PinElement, b: PinElement) -> PinElement:
    return PinElement.from_matrix(a.m @ b.m)


def sample_pin(rng: np.random.Generator, sector: SectorTag | None = None) -> PinElement:
    """Random Pin element; the sector is drawn uniformly unless given."""
    if sector is None:
        sector = list(SectorTag)[int(rng.integers(4))]
    s = sample_sl2_batch(rng, 1)[0]
    return PinElement.from_matrix(SECTOR_LIFTS[sector] @ embed_matrix(s))


# -- lifting O(1,3) back to Pin(1,3) -------------------------------------------


def quaternion_from_rotation(r) -> np.ndarray:
    """Unit quaternion (w, x, y, z) of a 3x3 rotation, largest-component branch."""
    r = np.asarray(r, dtype=float)
    tr = r[0, 0] + r[1, 1] + r[2, 2]
    diag = np.array([tr, r[0, 0] - r[1, 1] - r[2, 2], r[1, 1] - r[0, 0] - r[2, 2],
                     r[2, 2] - r[0, 0] - r[1, 1]])
    k = int(np.argmax(diag))
    big = 0.5 * np.sqrt(max(1.0 + diag[k], 0.0))
    f = 0.25 / big
    if k == 0:
        q = [big, (r[2, 1] - r[1, 2]) * f, (r[0, 2] - r[2, 0]) * f, (r[1, 0] - r[0, 1]) * f]
    elif k == 1:
        q = [(r[2, 1] - r[1, 2]) * f, big, (r[0, 1] + r[1, 0]) * f, (r[0, 2] + r[2, 0]) * f]
    elif k == 2:
        q = [(r[0, 2] - r[2, 0]) * f, (r[0, 1] + r[1, 0]) * f, big, (r[1, 2] + r[2, 1]) * f]
    else:
        q = [(r[1, 0] - r[0, 1]) * f, (r[0, 2] + r[2, 0]) * f, (r[1, 2] + r[2, 1]) * f, big]
    q = np.array(q)
    return q / np.linalg.norm(q)


def su2_from_quaternion(q) -> np.ndarray:
    w, x, y, z = q
    return w * SIGMA[0] - 1j * (x * SIGMA[1] + y * SIGMA[2] + z * SIGMA[3])


def lift_proper(s, tol: float | None = None) -> np.ndarray:
    """Some ``A`` in SL(2,C) with ``phi(A) = s`` for ``s`` in SO+(1,3).

    Polar split ``A = H^(1/2) U``: ``H = A A^dagger`` is read off the first
    column of ``s``; ``U`` in SU(2) comes from the leftover spatial rotation.
    """
    s = np.asarray(s, dtype=float)
    h = np.einsum("k,kab->ab", s[:, 0], SIGMA)
    # square root of a 2x2 positive Hermitian matrix with det 1
    root = (h + SIGMA[0]) / np.sqrt(np.trace(h).real + 2.0)
    boost = phi(root, tol)
    rot = (METRIC @ boost.T @ METRIC) @ s
    u = su2_from_quaternion(quaternion_from_rotation(rot[1:, 1:]))
    return root @ u


def preimage(el: LorentzElement, tol: float | None = None) -> tuple[PinElement, PinElement]:
    """Both Pin elements over ``el`` (they differ by sign)."""
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    a = lift_proper(el.proper_part, tol)
    m = SECTOR_LIFTS[el.tag] @ embed_matrix(a)
    plus = PinElement.from_matrix(m)
    scale = max(1.0, float(np.max(np.abs(el.m)))) ** 2
    if plus.sector != el.tag or max_abs_diff(plus.image.m, el.m) > tol * scale:
        raise InternalError("preimage lifting failed")
    return plus, -plus


def sample_lorentz(rng: np.random.Generator, sector: SectorTag | None = None) -> LorentzElement:
    if sector is None:
        sector = list(SectorTag)[int(rng.integers(4))]
    s = phi_batch(sample_sl2_batch(rng, 1))[0]
    return LorentzElement.from_parts(sector, s)


def is_gamma_combination(x, tol: float = 0.0) -> bool:
    """Whether every basis coefficient outside gamma_0..gamma_3 vanishes."""
    c = decompose_in_basis16(x)
    return bool(np.max(np.abs(np.delete(c, GAMMA_SLOTS))) <= tol)


def all_sign_choices():
    for sp, st in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        yield sp, st, sp * P_HAT, st * T_HAT

