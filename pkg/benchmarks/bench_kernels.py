"""Benchmark the compiled CSR kernel against the pure-NumPy fallback.

The sparse matrix-vector product dominates solver runtime (every conjugate
gradient iteration is one matvec), so backend selection is worth measuring.
Run from the repository root::

    python3 benchmarks/bench_kernels.py [--sizes 95 190 380] [--repeats 200]

Both backends are imported directly, so the numbers are comparable within a
single process regardless of which one the package selected at import.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from tresca2d import _core_np
from tresca2d.fem import assemble_stiffness
from tresca2d.sensitivity import builtin_disk_example

try:
    from tresca2d import _core_c
except ImportError:
    _core_c = None


def time_matvec(fn, matrix, x, repeats: int) -> float:
    """Median seconds per call over ``repeats`` calls (after one warmup)."""
    fn(matrix.indptr, matrix.indices, matrix.data, x)
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(matrix.indptr, matrix.indices, matrix.data, x)
        samples.append(time.perf_counter() - t0)
    samples.sort()
    return samples[len(samples) // 2]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[95, 190, 380],
                        help="boundary point counts for the test meshes")
    parser.add_argument("--repeats", type=int, default=200)
    args = parser.parse_args()

    example = builtin_disk_example()
    rng = np.random.default_rng(20240813)

    print(f"{'n_boundary':>10} {'dofs':>8} {'nnz':>10} "
          f"{'numpy (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for n in args.sizes:
        mesh = example.make_mesh(n)
        K = assemble_stiffness(mesh)
        x = rng.normal(size=K.n)
        nnz = len(K.data)

        t_np = time_matvec(_core_np.csr_matvec, K, x, args.repeats)
        if _core_c is not None:
            t_c = time_matvec(_core_c.csr_matvec, K, x, args.repeats)
            y_np = _core_np.csr_matvec(K.indptr, K.indices, K.data, x)
            y_c = _core_c.csr_matvec(K.indptr, K.indices, K.data, x)
            gap = float(np.abs(y_np - y_c).max())
            scale = float(np.abs(y_np).max())
            if not gap <= 1e-12 * max(scale, 1.0):
                raise SystemExit(
                    f"backends disagree beyond round-off: {gap:.3e} (scale {scale:.3e})"
                )
            speedup = f"{t_np / t_c:7.2f}x"
            cy = f"{1e6 * t_c:12.2f}"
        else:
            cy, speedup = f"{'n/a':>12}", f"{'n/a':>8}"
        print(f"{n:>10} {K.n:>8} {nnz:>10} {1e6 * t_np:>12.2f} {cy} {speedup}")

    if _core_c is None:
        print("\ncompiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
