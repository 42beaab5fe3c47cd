"""Compare the compiled and pure-Python grid Dijkstra on the great-circle strip.

    python benchmarks/bench_radius.py [--sizes 2e-2,1e-2,5e-3]
"""

import argparse
import time

import numpy as np

from legendrian import kernels
from legendrian.numeric import DomainSpec, great_circle_strip, sample_from_map


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="2e-2,1e-2,5e-3")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    dom = DomainSpec.rect(-0.5, 0.5, -0.8, 0.8)
    print(f"compiled backend available: {kernels.BACKEND == 'cython'}")
    print(f"{'h':>8} {'nodes':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for h in (float(s) for s in args.sizes.split(",")):
        S = sample_from_map(great_circle_strip, dom, h)
        X = np.nan_to_num(S.X)
        i, j = S.shape[0] // 2, S.shape[1] // 2
        tp, dp = best_of(lambda: kernels.grid_dijkstra(X, S.mask, i, j, backend="python"), args.repeat)
        if kernels.BACKEND == "cython":
            tc, dc = best_of(lambda: kernels.grid_dijkstra(X, S.mask, i, j, backend="cython"), args.repeat)
            assert np.allclose(dp, dc, rtol=0, atol=1e-12)
            print(f"{h:8.0e} {S.n_points:9d} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}")
        else:
            print(f"{h:8.0e} {S.n_points:9d} {tp:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
