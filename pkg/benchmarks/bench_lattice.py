"""Time the progression sweep: exact Fractions vs numpy lattice vs numba lattice.

    python3 benchmarks/bench_lattice.py [--pairs 20000] [--repeat 5]
"""
import argparse
import time

import numpy as np

from interleavings import _accel
from interleavings.interval_classifier import check_pair, sample_pairs


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=20000)
    ap.add_argument("--exact-pairs", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    pairs = sample_pairs(args.pairs, seed=0)
    lat, scale = _accel.to_lattice(pairs)
    print(f"{args.pairs} pairs, lattice scale {scale}")

    t_np, out_np = best_of(lambda: _accel.sweep_lattice(lat, use_numba=False), args.repeat)
    print(f"numpy   {t_np * 1e3:9.2f} ms")

    if _accel.HAVE_NUMBA:
        t0 = time.perf_counter()
        _accel.sweep_lattice(lat[:1], use_numba=True)
        print(f"numba   compile {time.perf_counter() - t0:6.2f} s")
        t_nb, out_nb = best_of(lambda: _accel.sweep_lattice(lat, use_numba=True), args.repeat)
        print(f"numba   {t_nb * 1e3:9.2f} ms  (agrees with numpy: {np.array_equal(out_np, out_nb)})")
    else:
        print("numba   not installed")

    sub = pairs[:args.exact_pairs]
    t_ex, _ = best_of(lambda: [check_pair(M, N) for M, N in sub], 1)
    per_pair = t_ex / len(sub)
    print(f"exact   {t_ex * 1e3:9.2f} ms for {len(sub)} pairs "
          f"(~{per_pair * args.pairs:.2f} s extrapolated to {args.pairs})")


if __name__ == "__main__":
    main()
