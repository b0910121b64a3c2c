"""Compare the numba and pure-numpy kernel paths.

    python benchmarks/bench_kernels.py [--repeat 5]

Numba compile time is excluded by a warm-up call on each path.
"""
import argparse
import timeit

import numpy as np

from pinlorentz import _kernels
from pinlorentz.dirac import sample_pin
from pinlorentz.sl2c import sample_sl2_batch
from pinlorentz.spintensor import FrameTransition, SpinTensor, SpinTensorType, transform


def best_of(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not _kernels.USE_JIT:
        print("numba path unavailable (missing numba or PINLORENTZ_NO_JIT set); nothing to compare")
        return

    rng = np.random.default_rng(0)
    cases = []
    for n in (10, 1_000, 100_000):
        mats = sample_sl2_batch(rng, n)
        cases.append((f"phi_batch n={n}", lambda jit, m=mats: _kernels.phi_batch(m, jit=jit),
                      max(1, 10_000 // n)))
    f = FrameTransition.from_pin(sample_pin(rng))
    for ttype in (SpinTensorType(1, 1, 0, 0, 0, 1), SpinTensorType(1, 1, 1, 1, 1, 1)):
        x = SpinTensor.random(ttype, rng)
        cases.append((f"transform {ttype}", lambda jit, x=x: transform(x, f, jit=jit), 50))

    print(f"{'case':32s} {'numpy':>12s} {'numba':>12s} {'speedup':>8s}")
    for name, fn, number in cases:
        fn(True)
        fn(False)
        t_np = best_of(lambda: fn(False), args.repeat, number)
        t_nb = best_of(lambda: fn(True), args.repeat, number)
        print(f"{name:32s} {t_np * 1e6:10.1f}us {t_nb * 1e6:10.1f}us {t_np / t_nb:7.2f}x")


if __name__ == "__main__":
    main()
