"""Compiled kernel versus numpy fallback: MSV rows per second at several arities.

    python3 benchmarks/bench_backends.py [--count 2000] [--arities 4,6,8,10]
"""
import argparse
import time

import numpy as np

from npnsig import kernels
from npnsig.corpus import random_tables
from npnsig.signatures import ALL_SIGNATURES, words_matrix


def time_backend(name, words, n, repeat):
    kernels.set_backend(name)
    best = float("inf")
    rows = None
    for _ in range(repeat):
        start = time.perf_counter()
        rows = kernels.msv_rows(words, n, ALL_SIGNATURES.flags)
        best = min(best, time.perf_counter() - start)
    return best, rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--arities", default="4,6,8,10")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = sorted(kernels.available_backends())
    previous = kernels.BACKEND
    print(f"{'n':>3} {'count':>7} " + " ".join(f"{b + '_s':>12}" for b in backends) + f" {'speedup':>8}")
    try:
        for n in (int(a) for a in args.arities.split(",")):
            words = words_matrix(random_tables(n, args.count, args.seed), n)
            times, outs = {}, {}
            for b in backends:
                times[b], outs[b] = time_backend(b, words, n, args.repeat)
            if len(outs) > 1:
                first, *rest = outs.values()
                assert all(np.array_equal(first, o) for o in rest), f"backends disagree at n={n}"
            speedup = times["python"] / times["compiled"] if "compiled" in times else float("nan")
            cols = " ".join(f"{times[b]:>12.4f}" for b in backends)
            print(f"{n:>3} {args.count:>7} {cols} {speedup:>8.1f}")
    finally:
        kernels.set_backend(previous)


if __name__ == "__main__":
    main()
