"""Compare the compiled and pure Smith normal form backends.

Boundary matrices of chessboard complexes and one cube complex serve as
inputs: sparse, integer, and exactly the shape of matrix the homology code
feeds the kernel.  Results must agree exactly; the table reports wall time
per backend and the speedup.

Run as: python3 benchmarks/bench_snf.py [--repeat N]
"""

import argparse
import time

from bbg import build_conf, chain_complex, chessboard
from bbg.snf import HAVE_COMPILED, smith_normal_form


def boundary(X, d):
    return chain_complex(X).boundary_matrix(d)


def cases():
    yield "Delta(4,4) d2", boundary(chessboard(4, 4), 2)
    yield "Delta(4,4) d3", boundary(chessboard(4, 4), 3)
    yield "Delta(4,5) d2", boundary(chessboard(4, 5), 2)
    yield "Delta(4,5) d3", boundary(chessboard(4, 5), 3)
    yield "Delta(5,5) d3", boundary(chessboard(5, 5), 3)
    yield "Conf_2(3,3) d2", boundary(build_conf(2, 3, 3), 2)


def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = ap.parse_args()

    if not HAVE_COMPILED:
        print("compiled kernel not available; timing the pure backend only")

    header = f"{'matrix':<16} {'shape':>9} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, M in cases():
        shape = f"{len(M)}x{len(M[0])}"
        pure_res, pure_t = timed(
            lambda: smith_normal_form(M, backend="pure"), args.repeat
        )
        if HAVE_COMPILED:
            comp_res, comp_t = timed(
                lambda: smith_normal_form(M, backend="compiled"), args.repeat
            )
            if comp_res != pure_res:
                raise SystemExit(f"backend disagreement on {name}")
            print(
                f"{name:<16} {shape:>9} {pure_t:>9.4f}s {comp_t:>9.4f}s "
                f"{pure_t / comp_t:>7.1f}x"
            )
        else:
            print(f"{name:<16} {shape:>9} {pure_t:>9.4f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
