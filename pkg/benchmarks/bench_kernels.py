#!/usr/bin/env python3
"""Benchmark the compiled elimination kernels against the pure-Python ones.

Times reduced row echelon form and long dictionary-pivot chains on random
rational matrices, checks that both backends return identical results, and
prints a comparison table. Run from the repository root:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from dictlp import _pykernels

try:
    from dictlp import _ckernels
except ImportError:
    _ckernels = None

RREF_SHAPES = [(6, 10), (9, 14), (12, 18)]
PIVOT_SHAPE = (10, 12)
PIVOT_CHAIN = 120
REPEATS = 5


def random_matrix(rng: random.Random, rows: int, cols: int) -> list[list[Fraction]]:
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(cols)]
        for _ in range(rows)
    ]


def best_time(fn) -> float:
    times = []
    for _ in range(REPEATS):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_rref(kernel, rows):
    return best_time(lambda: kernel.rref(rows))


def bench_pivot_chain(kernel, p, Q, q, z, moves):
    def run():
        cp, cQ, cq, cz = list(p), [list(row) for row in Q], list(q), z
        for r, s in moves:
            if cQ[r][s] == 0:
                continue
            cp, cQ, cq, cz = kernel.pivot_update(cp, cQ, cq, cz, r, s)
        return cp, cQ, cq, cz

    return best_time(run), run()


def main() -> None:
    rng = random.Random(4242)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the pure backend only\n")

    rows_fmt = "{:<22} {:>12} {:>12} {:>9}"
    print(rows_fmt.format("case", "python [ms]", "cython [ms]", "speedup"))
    print("-" * 58)

    for shape in RREF_SHAPES:
        matrix = random_matrix(rng, *shape)
        results = {}
        timings = {}
        for name, kernel in backends:
            timings[name] = bench_rref(kernel, matrix)
            results[name] = kernel.rref(matrix)
        if len(results) == 2:
            assert results["python"] == results["cython"], "backend mismatch on rref"
        _print_row(rows_fmt, f"rref {shape[0]}x{shape[1]}", timings)

    m, n = PIVOT_SHAPE
    p = [Fraction(rng.randint(-9, 9)) for _ in range(m)]
    Q = random_matrix(rng, m, n)
    q = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
    z = Fraction(0)
    moves = [(rng.randrange(m), rng.randrange(n)) for _ in range(PIVOT_CHAIN)]
    results = {}
    timings = {}
    for name, kernel in backends:
        timings[name], results[name] = bench_pivot_chain(kernel, p, Q, q, z, moves)
    if len(results) == 2:
        assert results["python"] == results["cython"], "backend mismatch on pivots"
    _print_row(rows_fmt, f"{PIVOT_CHAIN} pivots {m}x{n}", timings)


def _print_row(fmt: str, label: str, timings: dict[str, float]) -> None:
    py = timings["python"] * 1e3
    if "cython" in timings:
        cy = timings["cython"] * 1e3
        print(fmt.format(label, f"{py:.2f}", f"{cy:.2f}", f"{py / cy:.2f}x"))
    else:
        print(fmt.format(label, f"{py:.2f}", "-", "-"))


if __name__ == "__main__":
    main()
