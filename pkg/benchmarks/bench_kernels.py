#!/usr/bin/env python3
"""Benchmark the compiled amplitude kernel against the numpy fallback.

The amplitude/derivative evaluation on dense time grids dominates the cost
of the memory-measure sweeps, so this is the one loop worth compiling.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeats R]
"""

import argparse
import time

import numpy as np

from drivenqubit import SystemParams, derive
from drivenqubit import _amp_python

try:
    from drivenqubit import _amp_cython
except ImportError:
    _amp_cython = None

CASES = {
    "undriven memory (lam=0.01)": SystemParams(lam=0.01),
    "strong drive (omega=2)": SystemParams(lam=0.01, omega_rabi=2.0),
    "critically damped (lam=2)": SystemParams(lam=2.0),
    "detuned (delta=10)": SystemParams(lam=0.01, omega_rabi=1.0, delta_qc=10.0),
}


def run(impl, dp, ts, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.amp_damp(dp.m_const, dp.f_const, dp.coupling_prefactor, ts)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=2_000_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    ts = np.linspace(0.0, 100.0, args.points)
    print(f"grid: {args.points} points, best of {args.repeats}")
    header = f"{'case':34s} {'numpy':>10s} {'cython':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, params in CASES.items():
        dp = derive(params)
        t_py = run(_amp_python, dp, ts, args.repeats)
        if _amp_cython is None:
            print(f"{name:34s} {t_py * 1e3:8.1f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_cy = run(_amp_cython, dp, ts, args.repeats)
        a_p, d_p = _amp_python.amp_damp(dp.m_const, dp.f_const,
                                        dp.coupling_prefactor, ts[:10_000])
        a_c, d_c = _amp_cython.amp_damp(dp.m_const, dp.f_const,
                                        dp.coupling_prefactor, ts[:10_000])
        dev = max(np.max(np.abs(a_p - a_c)), np.max(np.abs(d_p - d_c)))
        print(f"{name:34s} {t_py * 1e3:8.1f}ms {t_cy * 1e3:8.1f}ms "
              f"{t_py / t_cy:7.2f}x   (twin dev {dev:.1e})")


if __name__ == "__main__":
    main()
