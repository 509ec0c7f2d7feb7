#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy twins.

Both backends implement identical math (cross-checked in
tests/test_backends.py); this script measures the speed difference on the
four hot kernels and on an end-to-end Euclidean-radius computation.

Usage:  python3 benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from eoradius import _kernels_numpy as knp

try:
    from eoradius import _kernels_numba as knb
except ImportError:
    knb = None


def unit(rng, n):
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return x / np.linalg.norm(x)


def bench(label, fn_numba, fn_numpy, repeats):
    if knb is not None:
        fn_numba()  # warm-up / JIT
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn_numpy()
    t_np = (time.perf_counter() - t0) / repeats
    if knb is None:
        print(f"{label:<34} numpy {t_np * 1e3:9.3f} ms   (numba unavailable)")
        return
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn_numba()
    t_nb = (time.perf_counter() - t0) / repeats
    print(
        f"{label:<34} numba {t_nb * 1e3:9.3f} ms   numpy {t_np * 1e3:9.3f} ms"
        f"   speedup {t_np / t_nb:6.1f}x"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    rng = np.random.default_rng(0)

    mats = (rng.standard_normal((3, 5, 5)) + 1j * rng.standard_normal((3, 5, 5))) / np.sqrt(2)
    starts = np.stack([unit(rng, 5) for _ in range(16)])
    mat = (rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))) / np.sqrt(2)
    mats2 = (rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2))) / np.sqrt(2)

    print(f"repeats = {args.repeats}\n")
    bench(
        "sphere ascent (16 starts, d=3 n=5)",
        lambda: knb.ascent_run(mats, starts, 300, 1e-9) if knb else None,
        lambda: knp.ascent_run(mats, starts, 300, 1e-9),
        args.repeats,
    )
    bench(
        "eigenvector alternation (16 starts)",
        lambda: knb.alternating_run(mats, starts, 100, 1e-12) if knb else None,
        lambda: knp.alternating_run(mats, starts, 100, 1e-12),
        args.repeats,
    )
    bench(
        "angle sweep (720 pts + refine, n=6)",
        lambda: knb.theta_sweep(mat, 720, 5, 1e-5) if knb else None,
        lambda: knp.theta_sweep(mat, 720, 5, 1e-5),
        args.repeats,
    )
    bench(
        "dense angle grid (10^4 pts, n=6)",
        lambda: knb.theta_grid_max(mat, 10_000) if knb else None,
        lambda: knp.theta_grid_max(mat, 10_000),
        args.repeats,
    )
    bench(
        "sphere grid scan (1001 x 2000, d=3)",
        lambda: knb.sphere_scan_2d(mats2, 0.0, np.pi / 2, 1001, 0.0, 2 * np.pi, 2000) if knb else None,
        lambda: knp.sphere_scan_2d(mats2, 0.0, np.pi / 2, 1001, 0.0, 2 * np.pi, 2000),
        args.repeats,
    )

    # end to end: the public optimiser through each backend
    import eoradius.radii as radii

    tup = radii.OperatorTuple(list(mats))
    cfg = radii.RadiusConfig(restarts=16, seed=0)
    saved = radii.kernels

    def with_backend(kernels):
        radii.kernels = kernels
        try:
            return radii.euclidean_radius(tup, cfg)
        finally:
            radii.kernels = saved

    bench(
        "euclidean_radius (end to end)",
        lambda: with_backend(knb) if knb else None,
        lambda: with_backend(knp),
        args.repeats,
    )
    if knb is not None:
        diff = abs(with_backend(knb).value - with_backend(knp).value)
        print(f"\nbackend agreement: |numba - numpy| = {diff:.2e}")


if __name__ == "__main__":
    main()
