"""Independent reference implementations used only by the tests.

These deliberately share no code with the package: plain quadratic scans
for dominance and brute-force vertex enumeration for linear programs.
"""

from fractions import Fraction
from itertools import combinations


def dominates(a, b) -> bool:
    """a <= b componentwise and a != b."""
    return a != b and all(x <= y for x, y in zip(a, b))


def strictly_dominates(a, b) -> bool:
    return all(x < y for x, y in zip(a, b))


def oracle_nondominated(points) -> list[int]:
    return [
        i
        for i, y in enumerate(points)
        if not any(dominates(z, y) for z in points)
    ]


def oracle_weakly_nondominated(points) -> list[int]:
    return [
        i
        for i, y in enumerate(points)
        if not any(strictly_dominates(z, y) for z in points)
    ]


def oracle_geoffrion_bound(points, y0) -> Fraction:
    bound = Fraction(0)
    p = len(y0)
    for y in set(points):
        if y == y0:
            continue
        for i in range(p):
            if y[i] < y0[i]:
                ratios = [
                    (y0[i] - y[i]) / (y[j] - y0[j])
                    for j in range(p)
                    if y[j] > y0[j]
                ]
                bound = max(bound, min(ratios))
    return bound


def gauss_solve(rows, rhs):
    """Solve a square exact system; None if singular."""
    n = len(rows)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return None
        a[col], a[pivot_row] = a[pivot_row], a[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(row[n] for row in a)


def oracle_polytope_vertices(rows, rhs):
    """Vertices of {x : rows . x <= rhs} by enumerating active subsets."""
    n = len(rows[0])
    found = set()
    for subset in combinations(range(len(rows)), n):
        x = gauss_solve([rows[i] for i in subset], [rhs[i] for i in subset])
        if x is None:
            continue
        if all(
            sum(c * v for c, v in zip(row, x)) <= r for row, r in zip(rows, rhs)
        ):
            found.add(x)
    return sorted(found)


def oracle_lp_minimum(objective, rows, rhs):
    """Exact minimum of objective . x over a bounded feasible region.

    Returns None when the region is empty.  Only valid when the region is
    known to be a polytope (the tests add box bounds to guarantee that).
    """
    vertices = oracle_polytope_vertices(rows, rhs)
    if not vertices:
        return None
    return min(sum(c * v for c, v in zip(objective, x)) for x in vertices)
