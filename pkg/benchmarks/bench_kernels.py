"""Compare the compiled search kernels with the pure-Python fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload calls both backends with identical arguments, checks that the
results match, and reports the best of ``--repeat`` wall-clock timings.
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Callable

from cott import _pykernels
from cott.families import catalog_patterns, family_Hn, sun
from cott.graphcore import Graph
from cott.oracle import enumerate_graphs
from cott.recognize import diagonal_candidates

try:
    from cott import _ckernels
except ImportError:
    _ckernels = None


def sim_workload(graphs: list[Graph]) -> list[tuple]:
    return [(list(g.adj), g.n, loops) for g in graphs for loops in diagonal_candidates(g)[:4]]


def brute_workload(graphs: list[Graph]) -> list[tuple]:
    return [(list(g.adj), g.n, (1 << g.n) - 1) for g in graphs]


def ind_workload(count: int, seed: int = 7) -> list[tuple]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r, c = rng.randint(4, 9), rng.randint(4, 9)
        out.append(([rng.getrandbits(c) for _ in range(r)], r, c))
    return out


def embed_workload() -> list[tuple]:
    hosts = [sun(5), family_Hn(4), sun(6)]
    out = []
    for host in hosts:
        for _, pattern in catalog_patterns(host.n):
            out.append((list(host.adj), host.n, list(pattern.adj), pattern.n, False))
    return out


def best_of(repeat: int, fn: Callable, calls: list[tuple]) -> tuple[float, list]:
    best = float("inf")
    results: list = []
    for _ in range(repeat):
        start = time.perf_counter()
        results = [fn(*args) for args in calls]
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    seven = enumerate_graphs(7)
    workloads = [
        ("simultaneous search, n=7 graphs", "sim_staircase_search", sim_workload(seven)),
        ("brute-force scan, n=7 sample", "sim_staircase_brute", brute_workload(seven[::20])),
        ("independent search, random matrices", "ind_staircase_search", ind_workload(3000)),
        ("induced embedding, catalog patterns", "induced_embedding", embed_workload()),
    ]
    print(f"{'workload':40} {'calls':>6} {'python s':>10} {'compiled s':>11} {'speed-up':>9}")
    for label, name, calls in workloads:
        t_py, r_py = best_of(args.repeat, getattr(_pykernels, name), calls)
        t_c, r_c = best_of(args.repeat, getattr(_ckernels, name), calls)
        norm = lambda rs: [None if r is None else repr(r).replace("(", "[").replace(")", "]") for r in rs]
        if norm(r_py) != norm(r_c):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:40} {len(calls):6d} {t_py:10.3f} {t_c:11.3f} {t_py / t_c:8.1f}x")


if __name__ == "__main__":
    main()
