"""Compare the compiled grid kernel with the pure-Python reference.

Run with ``python benchmarks/bench_kernels.py``. Each mode is timed on
the same box grid; results from both kernels are checked to agree.
"""
import argparse
import time

from relfair import _kernels_py, kernels


def grid(n, steps):
    return [list(range(0, steps + 1)) for _ in range(n)]


def rows_for(n):
    return [[(i + k) % n + 1 for i in range(n)] for k in range(n)]


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--steps", type=int, default=48, help="grid points per axis minus one")
    args = ap.parse_args()
    axes, rows = grid(args.n, args.steps), rows_for(args.n)
    points = (args.steps + 1) ** args.n
    print(f"grid: n={args.n}, {points} points; compiled kernel available: {kernels.COMPILED}")
    names = {kernels.MIN: "min", kernels.MAX: "max", kernels.BLEND: "blend", kernels.PROD: "prod", kernels.LEX: "lex"}
    for mode, name in names.items():
        tp, ref = timed(_kernels_py.box_argmax, axes, rows, mode, 1, 2)
        if kernels.COMPILED:
            tc, got = timed(kernels.box_argmax, axes, rows, mode, 1, 2)
            assert got == ref, f"kernels disagree in mode {name}"
            print(f"{name:>5}: python {tp:8.3f}s  compiled {tc:8.4f}s  speedup {tp / tc:7.1f}x")
        else:
            print(f"{name:>5}: python {tp:8.3f}s")


if __name__ == "__main__":
    main()
