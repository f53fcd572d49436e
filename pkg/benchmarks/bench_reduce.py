"""Compare the compiled and pure-Python column reduction on mosaic boundary matrices.

    python3 benchmarks/bench_reduce.py [--sizes 100 300 600] [--repeat 3]
"""
import argparse
import time

from chromix._kernels import reduce_boundary_compiled, reduce_boundary_python
from chromix.generate import uniform_random
from chromix.mosaic import chromatic_delaunay
from chromix.persistence import FilteredPair
from chromix.radius import radius_function


def matrices(n: int, seed: int):
    chi = uniform_random(n, 2, 2, seed=seed)
    F = radius_function(chi, chromatic_delaunay(chi))
    P = FilteredPair.from_filtration(F)
    return [list(c) for c in P.boundary]


def best_of(fn, cols, repeat, track_v):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(cols, track_v)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 600])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if reduce_boundary_compiled is None:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'points':>7} {'columns':>8} {'track_v':>7} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.sizes:
        cols = matrices(n, args.seed)
        for track_v in (False, True):
            tp, outp = best_of(reduce_boundary_python, cols, args.repeat, track_v)
            if reduce_boundary_compiled is None:
                print(f"{n:>7} {len(cols):>8} {str(track_v):>7} {tp:>10.4f} {'-':>10} {'-':>8}")
                continue
            tc, outc = best_of(reduce_boundary_compiled, cols, args.repeat, track_v)
            assert outp[0] == outc[0], "backends disagree"
            print(f"{n:>7} {len(cols):>8} {str(track_v):>7} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.1f}")


if __name__ == "__main__":
    main()
