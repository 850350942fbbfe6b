"""Brute-force pairing: numba backtracking vs. vectorised numpy.

Times the full pairing matrix (star graphs against left-greedy brackets) for
the largest two-letter contents, once per backend, after a warm-up call that
absorbs JIT compilation.

Run:

    python benchmarks/bench_pairing.py [--repeats 3]
"""

import argparse
import statistics
import time

from liebasis import _kernels
from liebasis.graphs import star_graph
from liebasis.lie import left_greedy_bracket
from liebasis.pairing import pair_bruteforce, pair_recursive
from liebasis.words import enumerate_lyndon_by_content

CONTENTS = ["a:4,b:4", "a:5,b:3", "a:3,b:2,c:2", "a:5,b:4"]


def workload(content):
    words = enumerate_lyndon_by_content(content)
    graphs = [star_graph(w) for w in words]
    exprs = [left_greedy_bracket(w) for w in words]
    return [(g, e) for g in graphs for e in exprs]


def run(cells, fn):
    t = time.perf_counter()
    values = [fn(g, e) for g, e in cells]
    return time.perf_counter() - t, values


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled: timing the numpy path only")

    for content in CONTENTS:
        cells = workload(content)
        print(f"\ncontent {content}: {len(cells)} pairings")
        reference = None
        for name, fn in [("recursive", pair_recursive)] + [
            (b, lambda g, e, b=b: pair_bruteforce(g, e, backend=b)) for b in backends
        ]:
            run(cells[:1], fn)  # warm-up / JIT
            times = []
            for _ in range(args.repeats):
                dt, values = run(cells, fn)
                times.append(dt)
            if reference is None:
                reference = values
            agree = "ok" if values == reference else "MISMATCH"
            print(f"  {name:<10} {statistics.mean(times) * 1e3:9.2f} ms  (sd {statistics.pstdev(times) * 1e3:.2f})  {agree}")


if __name__ == "__main__":
    main()
