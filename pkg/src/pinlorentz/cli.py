"""Command-line entry point.

Exit codes: 0 success, 64 usage error, 65 bad input data, 2 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import frames, spintensor
from .numerics import (DEFAULT_TOL, DomainError, InternalError, matrix_from_json,
                       matrix_to_json)
from .sl2c import lorentz_residuals, phi

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not value > 0 or not np.isfinite(value):
        raise argparse.ArgumentTypeError("must be a positive finite number")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=None,
                        help="float tolerance (default %(default)s -> 1e-9)")
    common.add_argument("--json", dest="json_out", metavar="PATH", default=None,
                        help="also write the JSON result to PATH")

    parser = _Parser(prog="pinlorentz", description="Pin(1,3) double cover and spin-tensor toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--samples", type=_positive_int, default=None,
                   help="override every per-check sample count")
    p.add_argument("--only", action="append", metavar="CHECK", help="run only the named check(s)")
    p.add_argument("--list", action="store_true", help="list check names and exit")

    p = sub.add_parser("phi", parents=[common], help="image of a 2x2 SL(2,C) matrix in SO+(1,3)")
    p.add_argument("input", help="JSON matrix file")

    p = sub.add_parser("classify", parents=[common], help="frame class of a 4x4 spinor transition")
    p.add_argument("input", help="JSON matrix file")

    p = sub.add_parser("transform", parents=[common], help="transform a spin-tensor")
    p.add_argument("tensor", help="JSON tensor file")
    p.add_argument("transition", help="JSON transition file")
    p.add_argument("--inverse", action="store_true", help="apply the inverse rule")
    return parser


def _load_json(path: str):
    with open(path) as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON: {exc}") from None


def _emit(obj, json_out: str | None) -> None:
    text = json.dumps(obj) + "\n"
    sys.stdout.write(text)
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(text)


def load_transition(obj) -> spintensor.FrameTransition:
    if not isinstance(obj, dict) or "s_hat" not in obj or "s" not in obj:
        raise ValueError("transition must be an object with 's_hat' and 's' matrices")
    s_hat = matrix_from_json(obj["s_hat"])
    s = matrix_from_json(obj["s"], real=True)
    t_hat = matrix_from_json(obj["t_hat"]) if "t_hat" in obj else None
    t = matrix_from_json(obj["t"], real=True) if "t" in obj else None
    try:
        return spintensor.FrameTransition.from_matrices(s_hat, s, t_hat, t)
    except np.linalg.LinAlgError:
        raise DomainError("transition matrix is singular") from None


def cmd_verify(args) -> int:
    from . import verify

    if args.list:
        for name, ref, _, n in verify.CHECKS:
            sys.stdout.write(f"{name:26s} {ref}\n")
        return EXIT_OK
    known = {c[0] for c in verify.CHECKS}
    if args.only and not set(args.only) <= known:
        raise UsageError(f"unknown check(s): {', '.join(sorted(set(args.only) - known))}")
    report = verify.run_suite(args.seed, args.samples, args.tol, args.only)
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(
            f"{status}  {r.name:26s} residual={r.max_residual:.2e} samples={r.samples:<6d}"
            f" {r.elapsed:6.2f}s  {r.detail}\n"
        )
    sys.stdout.write(f"{'all checks passed' if report.passed else 'SOME CHECKS FAILED'}\n")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(report.dumps())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_phi(args) -> int:
    m = matrix_from_json(_load_json(args.input))
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {m.shape[0]}x{m.shape[1]}")
    tol = DEFAULT_TOL.eps_float if args.tol is None else args.tol
    if abs(np.linalg.det(m) - 1.0) > tol:
        raise DomainError("not in SL(2,C)")
    s = phi(m, tol)
    _emit({"matrix": matrix_to_json(s), "residuals": lorentz_residuals(s)}, args.json_out)
    return EXIT_OK


def cmd_classify(args) -> int:
    m = matrix_from_json(_load_json(args.input))
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {m.shape[0]}x{m.shape[1]}")
    _emit(frames.classification_record(m, args.tol), args.json_out)
    return EXIT_OK


def cmd_transform(args) -> int:
    x = spintensor.tensor_from_json(_load_json(args.tensor))
    f = load_transition(_load_json(args.transition))
    y = spintensor.inverse_transform(x, f) if args.inverse else spintensor.transform(x, f)
    _emit(spintensor.tensor_to_json(y), args.json_out)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "phi": cmd_phi, "classify": cmd_classify, "transform": cmd_transform}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA
    except InternalError as exc:  # pragma: no cover
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_FAIL
