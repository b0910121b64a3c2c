"""The verification suite: one seeded, property-style check per identity.

Every check draws from its own generator ``default_rng([seed, index])`` so
results do not depend on which other checks ran. The JSON report records
each residual rounded up to a power of ten, so it stays byte-stable across
kernel paths and CPUs; the text output keeps the exact values.
"""
from __future__ import annotations

import contextlib
import io
import json
import os
import tempfile
import time
from dataclasses import dataclass, field

import numpy as np

from . import dirac, frames, literals, lorentz, sl2c, spintensor
from .dirac import (BASIS16, GAMMA, big_phi, compose_basis16, decompose_in_basis16, embed_matrix,
                    preimage, sample_lorentz, sample_pin)
from .lorentz import P, T, SectorTag
from .numerics import DEFAULT_TOL, I4C, I4R, max_abs_diff
from .spintensor import FrameTransition, SpinTensor, SpinTensorType

PREIMAGE_TOL = 1e-8
BASIS_ROUNDTRIP_TOL = 1e-12
ORACLE_TOL = 1e-12


@dataclass
class CheckResult:
    name: str
    reference: str
    passed: bool
    max_residual: float
    samples: int
    elapsed: float = 0.0
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "reference": self.reference,
            "status": "pass" if self.passed else "fail",
            "max_residual": round_residual(self.max_residual),
            "samples": self.samples,
        }


@dataclass
class VerifyReport:
    seed: int
    samples: int | None
    tolerance: float
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "checks": [r.to_json() for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"


def round_residual(r: float) -> float:
    """Smallest power of ten not below ``r`` (0 and non-finite values pass through)."""
    if r <= 0.0 or not np.isfinite(r):
        return float(r)
    return float(f"1e{int(np.ceil(np.log10(r) - 1e-9))}")


def _cycle_sectors(i: int) -> SectorTag:
    return list(SectorTag)[i % 4]


# -- individual checks ---------------------------------------------------------
# Each returns (passed, max_residual, samples, detail).


def check_phi_homomorphism(rng, n, tol):
    a = sl2c.sample_sl2_batch(rng, n)
    b = sl2c.sample_sl2_batch(rng, n)
    pa, pb, pab = sl2c.phi_batch(a), sl2c.phi_batch(b), sl2c.phi_batch(a @ b)
    hom = float(np.max(np.abs(pab - pa @ pb))) if n else 0.0
    worst_metric = worst_det = 0.0
    min_s00 = np.inf
    for s in pa:
        res = sl2c.lorentz_residuals(s)
        worst_metric = max(worst_metric, res["metric"])
        worst_det = max(worst_det, res["det"])
        min_s00 = min(min_s00, res["s00"])
    resid = max(hom, worst_metric, worst_det)
    ok = resid <= tol and min_s00 >= 1.0 - tol
    return ok, resid, n, f"min time-time entry {min_s00:.3f}"


def check_phi_cross_check(rng, n, tol):
    mats = sl2c.sample_sl2_batch(rng, n)
    fast = sl2c.phi_batch(mats)
    resid = max((max_abs_diff(f, sl2c.phi_via_sigma(m)) for f, m in zip(fast, mats)), default=0.0)
    return resid <= tol, resid, n, ""


def check_dual_pauli(rng, n, tol):
    mats = sl2c.sample_sl2_batch(rng, n)
    resid = max((sl2c.dual_pauli_residual(m) for m in mats), default=0.0)
    exact = max_abs_diff(sl2c.sigma_tilde_from_inverse(), sl2c.SIGMA_TILDE)
    ok = resid <= tol and exact == 0.0
    return ok, max(resid, exact), n, f"dual Pauli exact residual {exact}"


def check_gamma_algebra(rng, n, tol):
    anti = dirac.anticommutator_residual()
    printed = max(
        max_abs_diff(BASIS16[i], literals.PRINTED_BASIS16[dirac.basis_label(i)]) for i in range(16)
    )
    return anti == 0.0 and printed == 0.0, max(anti, printed), 16, ""


def check_gamma_basis(rng, n, tol):
    rank = int(np.linalg.matrix_rank(BASIS16.reshape(16, 16)))
    resid = 0.0
    for _ in range(n):
        x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        resid = max(resid, max_abs_diff(compose_basis16(decompose_in_basis16(x)), x))
    return rank == 16 and resid <= BASIS_ROUNDTRIP_TOL, resid, n, f"rank {rank}"


def check_inversion_solver(rng, n, tol):
    expected = {"P": (P, GAMMA[0]), "T": (T, dirac.gamma_product((1, 2, 3)))}
    ok, resid, dims = True, 0.0, []
    for name, (target, want) in expected.items():
        basis = dirac.complex_nullspace(dirac.inversion_system(target))
        dims.append(basis.shape[1])
        if basis.shape[1] != 1:
            ok = False
            continue
        got = dirac.normalize_inversion(basis[:, 0].reshape(4, 4))
        d = max_abs_diff(got, want)
        resid = max(resid, d)
        ok = ok and d == 0.0
    return ok, resid, 2, f"nullspace dimensions {dims}"


def check_inversion_anticommute(rng, n, tol):
    resid = 0.0
    for _, _, p_hat, t_hat in dirac.all_sign_choices():
        resid = max(resid, float(np.max(np.abs(p_hat @ t_hat + t_hat @ p_hat))))
        q = p_hat @ t_hat
        resid = max(resid, max_abs_diff(q @ q, -I4C))
    return resid == 0.0, resid, 4, ""


def check_pin_homomorphism(rng, n, tol):
    resid, sign_exact, sectors = 0.0, True, set()
    kernel = max(max_abs_diff(big_phi(I4C).m, I4R), max_abs_diff(big_phi(-I4C).m, I4R))
    for i in range(n):
        a = sample_pin(rng, _cycle_sectors(i))
        b = sample_pin(rng, _cycle_sectors(i // 4))
        sectors.add(a.sector)
        ab = big_phi(a.m @ b.m)
        resid = max(resid, max_abs_diff(ab.m, a.image.m @ b.image.m))
        sign_exact = sign_exact and max_abs_diff(big_phi(-a.m).m, a.image.m) == 0.0
        # the fibre over a.image is exactly {a, -a}
        lift, _ = preimage(a.image)
        fibre = min(max_abs_diff(lift.m, a.m), max_abs_diff(lift.m, -a.m))
        kernel = max(kernel, fibre)
    ok = resid <= tol and sign_exact and kernel <= tol and (n < 4 or len(sectors) == 4)
    return ok, max(resid, kernel), n, f"sectors covered {len(sectors)}"


def check_inversion_diagram(rng, n, tol):
    resid = 0.0
    for s in sl2c.sample_sl2_batch(rng, n):
        lhs = sl2c.phi(lorentz.psi_prime(s).m)
        rhs = lorentz.psi(sl2c.phi(s))
        resid = max(resid, max_abs_diff(lhs, rhs))
    return resid <= tol, resid, n, ""


def check_multiplication_table(rng, n, tol):
    resid, tags_ok = 0.0, True
    for ta in SectorTag:
        for tb in SectorTag:
            for _ in range(n):
                a, b = sample_lorentz(rng, ta), sample_lorentz(rng, tb)
                prod = lorentz.mul(a, b)
                direct = a.m @ b.m
                resid = max(resid, max_abs_diff(prod.m, direct))
                tags_ok = tags_ok and prod.tag == lorentz.decompose(direct).tag
    return resid <= tol and tags_ok, resid, 16 * n, ""


def check_preimage(rng, n, tol):
    resid, neg_exact = 0.0, True
    for i in range(n):
        el = sample_lorentz(rng, _cycle_sectors(i))
        plus, minus = preimage(el, PREIMAGE_TOL)
        resid = max(resid, max_abs_diff(big_phi(plus.m).m, el.m))
        neg_exact = neg_exact and max_abs_diff(minus.m, -plus.m) == 0.0
    return resid <= PREIMAGE_TOL and neg_exact, resid, n, ""


def _random_tensor_type(rng) -> SpinTensorType:
    return SpinTensorType(*(int(c) for c in rng.integers(0, 2, size=6)))


def _random_sparse(ttype, rng, nonzeros=6) -> SpinTensor:
    comps = np.zeros(ttype.shape, dtype=np.complex128)
    for _ in range(nonzeros):
        idx = tuple(int(v) for v in rng.integers(0, 4, size=ttype.order))
        comps[idx] = rng.standard_normal() + 1j * rng.standard_normal()
    return SpinTensor(ttype, comps)


def _moderate_transition(rng, max_cond: float = 10.0) -> FrameTransition:
    # absolute residual bounds only make sense for well-conditioned transitions:
    # a roundtrip through k slots loses about cond**k in relative accuracy
    while True:
        el = sample_pin(rng)
        if np.linalg.cond(el.m) <= max_cond:
            return FrameTransition.from_pin(el)


def check_spin_tensor_engine(rng, n, tol):
    roundtrip = oracle = 0.0
    tau_exact = True
    for _ in range(n):
        ttype = _random_tensor_type(rng)
        x = SpinTensor.random(ttype, rng) if ttype.order <= 3 else _random_sparse(ttype, rng)
        f = _moderate_transition(rng)
        y = spintensor.transform(x, f)
        back = spintensor.inverse_transform(y, f)
        roundtrip = max(roundtrip, max_abs_diff(back.components, x.components))
        ref = spintensor.transform_reference(x, f)
        oracle = max(oracle, max_abs_diff(y.components, ref.components))
        tau_exact = tau_exact and np.array_equal(spintensor.tau(spintensor.tau(x)).components,
                                                 x.components)
    ok = roundtrip <= tol and oracle <= ORACLE_TOL and tau_exact
    return ok, max(roundtrip, oracle), n, f"roundtrip {roundtrip:.1e}, oracle {oracle:.1e}"


def check_gamma_symbols(rng, n, tol):
    discrete = max(
        spintensor.gamma_symbol_invariance(frames.make_reversed_frame(kind), sign)
        for kind, sign in (("P", 1), ("T", 1), ("PT", -1))
    )
    printed = max_abs_diff(
        np.transpose(spintensor.gamma_symbols().components, (2, 0, 1)), literals.PRINTED_GAMMA_SYMBOLS
    )
    chiral = 0.0
    for s in sl2c.sample_sl2_batch(rng, n):
        f = FrameTransition.from_pin(dirac.embed_sl2(s))
        chiral = max(chiral, spintensor.gamma_symbol_invariance(f))
    ok = discrete == 0.0 and printed == 0.0 and chiral <= tol
    return ok, max(discrete, printed, chiral), n, f"discrete residual {discrete}"


def check_frame_classes(rng, n, tol):
    expected = {
        SectorTag.PROPER: (1, 1, 1),
        SectorTag.P_SECTOR: (-1, -1, 1),
        SectorTag.T_SECTOR: (1, -1, -1),
        SectorTag.MINUS_SECTOR: (-1, 1, -1),
    }
    ok, resid = True, 0.0
    for tag, base in dirac.SECTOR_LIFTS.items():
        for s in sl2c.sample_sl2_batch(rng, n):
            el = dirac.PinElement.from_matrix(base @ embed_matrix(s))
            f = FrameTransition.from_pin(el)
            signs = frames.field_signs(f, tol)
            cls = frames.classify_frame(f, tol)
            ok = ok and signs == expected[tag] and cls.signature == signs and cls.sector == el.sector
            for new, ref, sg in zip(frames.transform_basic_fields(f),
                                    (frames.D_METRIC, frames.CHIRALITY, frames.DIRAC_FORM), signs):
                resid = max(resid, max_abs_diff(new, sg * ref))
    return ok, resid, 4 * n, ""


def check_cli_classify(rng, n, tol):
    from . import cli
    from .numerics import matrix_to_json

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "gamma0.json")
        with open(path, "w") as fh:
            json.dump(matrix_to_json(GAMMA[0]), fh)
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.main(["classify", path])
    try:
        cls = json.loads(buf.getvalue())["class"]
    except (ValueError, KeyError):
        cls = None
    return code == 0 and cls == "PReverseAntiChiral", 0.0, 1, f"class {cls}"


# name, reference, function, default sample count (None: fixed-size check)
CHECKS = [
    ("phi_homomorphism", "SL(2,C) -> SO+(1,3) homomorphism and range", check_phi_homomorphism, 1000),
    ("phi_pauli_cross_check", "closed form vs Pauli-trace extraction", check_phi_cross_check, 500),
    ("dual_pauli_identity", "dual Pauli transformation law", check_dual_pauli, 500),
    ("gamma_anticommutation", "Clifford relation and tabulated products", check_gamma_algebra, None),
    ("gamma_basis", "16-element gamma basis spans M4(C)", check_gamma_basis, 100),
    ("inversion_solver", "inversion operators from the linear system", check_inversion_solver, None),
    ("inversion_anticommute", "P_hat T_hat anticommute, square -I", check_inversion_anticommute, None),
    ("pin_homomorphism", "Pin(1,3) -> O(1,3) with kernel +-I", check_pin_homomorphism, 1000),
    ("inversion_diagram", "phi intertwines the two inversion maps", check_inversion_diagram, 500),
    ("multiplication_table", "reduced O(1,3) multiplication table", check_multiplication_table, 200),
    ("preimage_lifting", "lifting O(1,3) back to Pin(1,3)", check_preimage, 1000),
    ("spin_tensor_engine", "spin-tensor transformation rule", check_spin_tensor_engine, 100),
    ("gamma_symbol_invariance", "gamma symbols are frame invariant", check_gamma_symbols, 200),
    ("frame_classification", "frame classes from basic-field signs", check_frame_classes, 200),
    ("cli_classify", "command-line classification of gamma_0", check_cli_classify, None),
]


def run_suite(seed: int = 42, samples: int | None = None, tol: float | None = None,
              only: list[str] | None = None) -> VerifyReport:
    tol = DEFAULT_TOL.eps_float if tol is None else tol
    if samples is not None and samples < 1:
        raise ValueError("samples must be at least 1")
    report = VerifyReport(seed, samples, tol)
    for index, (name, ref, fn, default_n) in enumerate(CHECKS):
        if only is not None and name not in only:
            continue
        n = default_n if samples is None or default_n is None else samples
        rng = np.random.default_rng([seed, index])
        start = time.perf_counter()
        passed, resid, count, detail = fn(rng, n or 0, tol)
        report.results.append(
            CheckResult(name, ref, bool(passed), float(resid), int(count),
                        time.perf_counter() - start, detail)
        )
    return report
