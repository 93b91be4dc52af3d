"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Both backends run the same workloads; node counts and values are checked to
match before any timing is reported.
"""
import argparse
import time

import numpy as np

from ghspace import Point1DSet, from_point_set
from ghspace import _kernels_py
from ghspace import gromov, hausdorff1d

try:
    from ghspace import _kernels as _compiled
except ImportError:
    _compiled = None


def gh_workload(rng, size, pairs):
    out = []
    for _ in range(pairs):
        x = Point1DSet.from_values(rng.choice(10_000, size, replace=False) / 1000)
        y = Point1DSet.from_values(rng.choice(10_000, size, replace=False) / 1000)
        out.append((from_point_set(x), from_point_set(y)))
    return out


def eh_workload(rng, size, pairs):
    return [(Point1DSet.from_values(rng.uniform(0, 1, size)), Point1DSet.from_values(rng.uniform(0, 1, size)))
            for _ in range(pairs)]


def timed(backend, fn, items, repeat):
    gromov.kernels = hausdorff1d.kernels = backend
    best, results = np.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [fn(*it) for it in items]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    if _compiled is None:
        raise SystemExit("compiled extension not built; nothing to compare")

    rng = np.random.default_rng(args.seed)
    cases = [
        (f"gh_exact  n={n:<2d} x{k}", lambda a, b: gromov.gh_exact(a, b), gh_workload(rng, n, k))
        for n, k in [(4, 50), (6, 20), (7, 5), (8, 3)]
    ] + [
        (f"eh_exact  n={n:<2d} x{k}", lambda a, b: hausdorff1d.eh_distance(a, b), eh_workload(rng, n, k))
        for n, k in [(5, 200), (10, 20), (20, 3)]
    ]
    print(f"{'workload':<22}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")
    original = gromov.kernels
    try:
        for name, fn, items in cases:
            tc, rc = timed(_compiled, fn, items, args.repeat)
            tp, rp = timed(_kernels_py, fn, items, args.repeat)
            for a, b in zip(rc, rp):
                assert a.value == b.value and getattr(a, "nodes", 0) == getattr(b, "nodes", 0), name
            print(f"{name:<22}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x")
    finally:
        gromov.kernels = hausdorff1d.kernels = original


if __name__ == "__main__":
    main()
