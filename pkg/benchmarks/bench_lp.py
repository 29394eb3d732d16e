#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python lane.

Times the two hot paths on representative workloads:

* lp_solve on polyhedral section programs and hull feasibility programs,
* pairwise dominance flags on finite point sets.

Usage: python benchmarks/bench_lp.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from pareto_kit.dominance import _dominated_flags_pure, _unique_groups
from pareto_kit.generate import gen_finite, gen_hull, gen_poly
from pareto_kit.numerics import LE, EQ, linprog, lp_solve
from pareto_kit.numerics.linprog import _compiled


def _section_lps():
    rng = random.Random(5)
    lps = []
    for i in range(60):
        p = (2, 3, 4)[i % 3]
        P, _, member = gen_poly(p, rng.randint(2, 10), i, "tilted")
        lam = [Fraction(rng.randint(1, 5)) for _ in range(p)]
        rows = [(list(row), LE, rhs) for row, rhs in zip(P.A, P.b)]
        lps.append(linprog(lam, rows, upper=list(member)))
    return lps


def _hull_lps():
    rng = random.Random(6)
    lps = []
    for i in range(60):
        p = (2, 3, 4)[i % 3]
        w = gen_hull(p, rng.randint(4, 12), i)
        target = w.generators[0]
        m = len(w.generators)
        rows = [
            ([g[j] for g in w.generators], EQ, target[j]) for j in range(p)
        ]
        rows.append(([1] * m, EQ, 1))
        lps.append(linprog([0] * m, rows, lower=[0] * m))
    return lps


def _time_lp(lps, backend, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        for lp in lps:
            lp_solve(lp, backend=backend)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def _dominance_inputs():
    sets = []
    for i in range(20):
        p = (2, 3, 4)[i % 3]
        points = gen_finite(p, 200, i)
        values, _ = _unique_groups(tuple(points))
        sets.append(values)
    return sets


def _time_dominance(inputs, compiled, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        for values in inputs:
            for strict in (False, True):
                if compiled:
                    nums = [[c.numerator for c in row] for row in values]
                    dens = [[c.denominator for c in row] for row in values]
                    _compiled.dominated_flags(nums, dens, strict)
                else:
                    _dominated_flags_pure(values, strict)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _compiled is None:
        print("compiled kernels are not built; only the pure lane is available")
        return

    rows = []
    for name, lps in (("section LPs", _section_lps()), ("hull LPs", _hull_lps())):
        pure = _time_lp(lps, "pure", args.repeat)
        fast = _time_lp(lps, "compiled", args.repeat)
        rows.append((name, len(lps), pure, fast))

    dominance = _dominance_inputs()
    pure = _time_dominance(dominance, compiled=False, repeat=args.repeat)
    fast = _time_dominance(dominance, compiled=True, repeat=args.repeat)
    rows.append(("dominance flags", len(dominance) * 2, pure, fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'n':>4}  {'pure':>9}  {'compiled':>9}  {'speedup':>7}")
    for name, count, pure, fast in rows:
        print(
            f"{name:<{width}}  {count:>4}  {pure:>8.3f}s  {fast:>8.3f}s  "
            f"{pure / fast:>6.1f}x"
        )


if __name__ == "__main__":
    main()
