"""Time the compiled kernels against the pure-numpy fallback.

Run from a checkout:

    python3 scripts/benchmark_kernels.py

The backend is forced per measurement by reloading tourlab._kernels under
each TOURLAB_KERNELS setting, so one process covers both paths. Compilation
happens inside a warmup call and is excluded from the timings.
"""

from __future__ import annotations

import importlib
import os
import statistics
import time

import numpy as np


def _load(backend: str):
    os.environ["TOURLAB_KERNELS"] = backend
    import tourlab._kernels as kernels

    return importlib.reload(kernels)


def _time(fn, repeats: int = 5) -> float:
    fn()  # warmup; first numba call compiles
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def _workloads(kernels):
    import tourlab as tl

    s4 = tl.s_t(4)
    out = np.array(s4.out_sets, dtype=np.int64)
    rng = np.random.Generator(np.random.PCG64(0))
    perm_pool = np.array(
        [rng.permutation(7) for _ in range(5040)], dtype=np.int64
    )
    adj = np.zeros((7, 7), dtype=np.uint8)
    t7 = tl.random_tournament(7, seed=1)
    for v in range(7):
        for u in tl.bits(t7.out_sets[v]):
            adj[v, u] = 1

    def transitive_and_chi():
        trans = kernels.transitive_table(out, s4.n)
        kernels.chi_table_from_trans(trans)

    def min_code():
        kernels.min_code(adj, perm_pool)

    def subdom():
        kernels.subdom_scan(out, s4.n)

    return {
        "chi table, 15 vertices": transitive_and_chi,
        "canonical code, 7 vertices x 5040 perms": min_code,
        "subdomination scan, 15 vertices": subdom,
    }


def main():
    results: dict[str, dict[str, float]] = {}
    for backend in ("pure", "numba"):
        kernels = _load(backend)
        print(f"backend requested={backend} active={kernels.backend()}")
        for name, fn in _workloads(kernels).items():
            results.setdefault(name, {})[backend] = _time(fn)
    print()
    width = max(len(name) for name in results)
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'numba':>10}  {'speedup':>8}")
    for name, times in results.items():
        ratio = times["pure"] / times["numba"] if times["numba"] > 0 else float("inf")
        print(
            f"{name.ljust(width)}  {times['pure']:>9.4f}s  {times['numba']:>9.4f}s"
            f"  {ratio:>7.1f}x"
        )


if __name__ == "__main__":
    main()
