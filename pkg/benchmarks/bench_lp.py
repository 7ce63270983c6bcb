"""Compare the compiled and pure-Python simplex kernels.

    python3 benchmarks/bench_lp.py [--reps N]

Runs the same batch of random standard-form LPs and one skeleton workload
through each kernel and prints wall time per backend.
"""

import argparse
import random
import time

from supertrop import lp
from supertrop.lp import _simplex_py


def lp_batch(seed, count):
    r = random.Random(seed)
    out = []
    for _ in range(count):
        m, k = r.randint(2, 4), r.randint(4, 12)
        rows = [[r.randint(-6, 6) for _ in range(k)] for _ in range(m)]
        rhs = [r.randint(-6, 6) for _ in range(m)]
        cost = [r.randint(-6, 6) for _ in range(k)]
        out.append((rows, rhs, cost))
    return out


def time_kernel(solve, batch, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for rows, rhs, cost in batch:
            solve(rows, rhs, cost)
        best = min(best, time.perf_counter() - t0)
    return best


def skeleton_workload(reps):
    from supertrop.cli import read_expr
    from supertrop.complex import skel_complex
    from supertrop.decompose import ho_decompose
    exprs = [read_expr("hat: x1+x2+t(0)", 2),
             read_expr("(t(1)*x1^2+x1*x2+t(-1)*x2^2)/(x1+x2+t(0))", 2),
             read_expr("x1/(x2+t(0))", 2)]
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for f in exprs:
            skel_complex(f)
            ho_decompose(f)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--count", type=int, default=2000)
    args = ap.parse_args()
    batch = lp_batch(0, args.count)
    print("compiled backend available: %s" % (lp.BACKEND == "cython"))
    t_py = time_kernel(_simplex_py.solve_std, batch, args.reps)
    print("pure python  : %.3fs for %d LPs" % (t_py, len(batch)))
    if lp.BACKEND == "cython":
        from supertrop.lp import _simplex
        t_c = time_kernel(_simplex.solve_std, batch, args.reps)
        print("cython       : %.3fs for %d LPs (%.1fx)" % (t_c, len(batch), t_py / t_c))
    skeleton_workload(1)  # warm the pruning cache for both runs
    saved = lp.BACKEND
    for name in ("python", "cython") if saved == "cython" else ("python",):
        lp.set_backend(name)
        print("skeleton+HO workload [%s]: %.3fs" % (name, skeleton_workload(args.reps)))
    lp.set_backend(saved)


if __name__ == "__main__":
    main()
