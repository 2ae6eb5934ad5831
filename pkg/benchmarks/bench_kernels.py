#!/usr/bin/env python3
"""Compare the compiled enumeration kernel against its pure-Python twin.

Times the full labelling scan and a batch of consensus-operator steps on
seeded random frameworks. Run from a checkout:

    python benchmarks/bench_kernels.py [-n 10] [--p 0.3] [--seed 1] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from maymust._kernel import pure
from maymust.generate import generate_random

try:
    from maymust._kernel import _speedups
except ImportError:
    _speedups = None


def time_backend(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=10, help="arguments per framework")
    ap.add_argument("--p", default="0.3", help="attack probability")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    f = generate_random(args.n, Fraction(args.p), "uniform", args.seed)
    d = f.dense()
    scan_args = (d.n, d.att_flat, d.att_start, d.acc_may, d.acc_must,
                 d.rej_may, d.rej_must, False)
    base = bytes([2] * d.n)
    gamma_args = (d.n, d.att_flat, d.att_start, d.acc_may, d.acc_must,
                  d.rej_may, d.rej_must, base)

    print(f"framework: n={f.n}, attacks={len(f.attacks)}, "
          f"scan space 3^{f.n} = {3 ** f.n}")

    t_pure_scan = time_backend(pure.scan_proper, scan_args, args.repeat)
    t_pure_gamma = time_backend(pure.gamma_step, gamma_args, args.repeat)
    print(f"pure      scan {t_pure_scan * 1e3:10.1f} ms   "
          f"gamma-from-bottom {t_pure_gamma * 1e3:10.1f} ms")

    if _speedups is None:
        print("compiled  (extension not built)")
        return

    assert _speedups.scan_proper(*scan_args) == pure.scan_proper(*scan_args)
    assert _speedups.gamma_step(*gamma_args) == pure.gamma_step(*gamma_args)

    t_c_scan = time_backend(_speedups.scan_proper, scan_args, args.repeat)
    t_c_gamma = time_backend(_speedups.gamma_step, gamma_args, args.repeat)
    print(f"compiled  scan {t_c_scan * 1e3:10.1f} ms   "
          f"gamma-from-bottom {t_c_gamma * 1e3:10.1f} ms")
    print(f"speedup   scan {t_pure_scan / t_c_scan:10.1f} x   "
          f"gamma-from-bottom {t_pure_gamma / t_c_gamma:10.1f} x")


if __name__ == "__main__":
    main()
