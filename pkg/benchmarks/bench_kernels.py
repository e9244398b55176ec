"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both flavours are called directly so a single process can compare them;
the library itself picks one through SLIPFLOW_NO_NUMBA.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from slipflow import kernels
from slipflow._accel import HAVE_NUMBA
from slipflow.ngon import polygon_mesh
from slipflow.rootkit import bessel_j0_zeros


def best_of(fn, repeat: int) -> float:
    fn()  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    x = np.linspace(0.0, 200.0, 20000)
    c = np.linspace(0.05, 4.0, 20000)
    k = np.zeros(c.shape, dtype=np.int64)
    lam = bessel_j0_zeros(200) ** 2
    w = 1.0 / lam ** 2
    t = np.linspace(0.0, 2.0, 2000)
    mesh = polygon_mesh(6, np.pi, 48)
    return [
        ("bessel J1, 2e4 points", lambda: kernels._jn_array_nb(1, x), lambda: kernels._jn_array_np(1, x)),
        ("strip roots, 2e4 widths", lambda: kernels._strip_roots_nb(c, 1.0, k),
         lambda: kernels._strip_roots_np(c, 1.0, k)),
        ("decay sum, 200 modes x 2000 t", lambda: kernels._decay_sum_nb(lam, w, t),
         lambda: kernels._decay_sum_np(lam, w, t)),
        (f"P1 assembly, {mesh.triangles.shape[0]} triangles",
         lambda: kernels._p1_assemble_nb(mesh.points, mesh.triangles),
         lambda: kernels._p1_assemble_np(mesh.points, mesh.triangles)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':36s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, nb, npf in cases():
        a = best_of(nb, args.repeat)
        b = best_of(npf, args.repeat)
        print(f"{name:36s} {a * 1e3:10.3f} {b * 1e3:10.3f} {b / a:8.2f}")


if __name__ == "__main__":
    main()
