"""Compare the compiled and pure-Python exact kernels on random integer matrices.

    python3 benchmarks/bench_kernels.py [--sizes 10 20 40] [--repeat 3] [--seed 0]

Both backends get identical inputs and their outputs are asserted equal
before any timing is reported.
"""
import argparse
import random
import sys
import time

from wlpkit import _kernels_py

try:
    from wlpkit import _kernels as _kernels_ext
except ImportError:
    _kernels_ext = None


def incidence_like(rng, nrows, ncols):
    # 0/1 rows with two or three ones, like the matrices the package produces
    rows = []
    for _ in range(nrows):
        r = [0] * ncols
        for k in rng.sample(range(ncols), min(ncols, rng.choice([2, 3]))):
            r[k] = 1
        rows.append(r)
    return rows


def dense(rng, n):
    return [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 60])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels_ext is None:
        print("compiled extension not built; only the pure-Python kernels are available")
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':<14}{'size':>6}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for n in args.sizes:
        inc = incidence_like(rng, 2 * n, n)
        sq = dense(rng, n)
        cases = [
            ("rank", lambda k: k.bareiss_rank(inc, n)),
            ("det", lambda k: k.bareiss_det(sq)),
            ("rank mod 2", lambda k: k.rank_mod_p(inc, n, 2)),
            ("smith", lambda k: k.smith_factors(inc, n)),
        ]
        for name, call in cases:
            tp, rp = best_of(lambda: call(_kernels_py), args.repeat)
            tc, rc = best_of(lambda: call(_kernels_ext), args.repeat)
            assert rp == rc, f"{name} disagrees at size {n}"
            print(f"{name:<14}{n:>6}{tp:>12.4f}{tc:>12.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
