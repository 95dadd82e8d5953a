"""Benchmark the hot kernels: numba backend against the numpy fallback.

Run with:  python -m quarticlines.bench [--height 24]

Both backends are driven on identical workloads; results are checked to
agree before timings are reported.  The first numba call includes JIT
compilation unless the on-disk cache is warm, so each kernel is run once
before timing.
"""

import argparse
import time

import numpy as np

from .forms import QuarticForm, quartic_exponents

EXAMPLE = QuarticForm({(4, 0, 0, 0): 1, (1, 3, 0, 0): -1, (0, 0, 4, 0): -1, (0, 0, 1, 3): 1})
EXP = np.array(quartic_exponents(), dtype=np.int64)


def _rows_set(arr):
    return {tuple(int(v) for v in row) for row in arr}


def _time(fn, *args, repeat=3):
    fn(*args)  # warm-up (JIT or cache touch)
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description="kernel backend benchmark")
    ap.add_argument("--height", type=int, default=24, help="sieve height bound")
    ap.add_argument("--exhaustive-height", type=int, default=10)
    args = ap.parse_args(argv)

    from . import _kernels_numpy as knp

    try:
        from . import _kernels_numba as knb
    except ImportError:
        print("numba backend unavailable; nothing to compare")
        return 1

    fc = np.array(EXAMPLE.coefficient_vector(), dtype=np.int64)
    H = args.height
    p1, p2 = 7, 11
    while p1 * p2 < 2 * H + 1:
        p1, p2 = p2, p2 + 2

    workloads = []

    t_nb, z1_nb = _time(knb.sieve_zp, fc, EXP, 13)
    t_np, z1_np = _time(knp.sieve_zp, fc, EXP, 13)
    assert _rows_set(z1_nb) == _rows_set(z1_np)
    workloads.append(("sieve_zp(p=13)", t_nb, t_np))

    za_nb = knb.sieve_zp(fc, EXP, p1)
    zb_nb = knb.sieve_zp(fc, EXP, p2)
    t_nb, j_nb = _time(knb.crt_join, za_nb, zb_nb, p1, p2, H, fc, EXP)
    t_np, j_np = _time(knp.crt_join, za_nb, zb_nb, p1, p2, H, fc, EXP)
    assert _rows_set(j_nb) == _rows_set(j_np)
    workloads.append((f"crt_join(H={H}, p={p1},{p2})", t_nb, t_np))

    He = args.exhaustive_height
    t_nb, e_nb = _time(knb.exhaustive_candidates, fc, EXP, He)
    t_np, e_np = _time(knp.exhaustive_candidates, fc, EXP, He)
    assert _rows_set(e_nb) == _rows_set(e_np)
    workloads.append((f"exhaustive_candidates(H={He})", t_nb, t_np))

    t_nb, r_nb = _time(knb.rational_points, fc, EXP, 8)
    t_np, r_np = _time(knp.rational_points, fc, EXP, 8)
    assert _rows_set(r_nb) == _rows_set(r_np)
    workloads.append(("rational_points(H=8)", t_nb, t_np))

    print(f"{'kernel':38s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}")
    for name, tn, tp in workloads:
        print(f"{name:38s} {tn:9.3f}s {tp:9.3f}s {tp / tn:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
