"""Time the brute-force W_k kernel: numba vs numpy, with the exact DP for reference.

    python benchmarks/bench_variation.py --s 3 --k 8 10 12 14
"""

import argparse
import time

import numpy as np

from tribin import TribinConfig, variation_Wk_dp
from tribin import _kernels


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--s", type=int, default=3)
    parser.add_argument("--k", type=int, nargs="+", default=[8, 10, 12, 14])
    args = parser.parse_args()

    cfg = TribinConfig.build(s=args.s)
    mask = np.zeros(args.s, dtype=np.bool_)
    for d in cfg.partition.a1:
        mask[d] = True

    have_numba = _kernels.histogram_numba is not None
    if have_numba:
        _kernels.histogram_numba(args.s, 2, mask, True)  # compile outside the timings
    print(f"numba available: {have_numba}; default path: {'numba' if _kernels.USE_NUMBA else 'numpy'}")
    print(f"{'k':>3} {'prefixes':>10} {'numpy s':>10} {'numba s':>10} {'speedup':>8} {'dp s':>10}")
    for k in args.k:
        if args.s**k > 10**7:
            print(f"{k:>3} skipped: {args.s}^{k} exceeds the enumeration guard")
            continue
        t_np, h_np = timed(_kernels.histogram_numpy, args.s, k, mask, True)
        if have_numba:
            t_nb, h_nb = timed(_kernels.histogram_numba, args.s, k, mask, True)
            assert np.array_equal(h_np, h_nb)
            nb_col, speed = f"{t_nb:10.4f}", f"{t_np / t_nb:7.1f}x"
        else:
            nb_col, speed = f"{'-':>10}", f"{'-':>8}"
        t_dp, _ = timed(variation_Wk_dp, cfg, k)
        print(f"{k:>3} {args.s**k:>10} {t_np:10.4f} {nb_col} {speed} {t_dp:10.4f}")


if __name__ == "__main__":
    main()
