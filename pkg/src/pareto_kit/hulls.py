"""Membership classifiers for the nondominated structure of a convex hull.

The analyzed set is conv(W) for a finite generator list W.  Each verdict is
decided by one exact LP:

* weak nondominance: maximize the common slack delta of a hull point
  sitting at least delta below the query in every coordinate; the query is
  weakly nondominated iff the optimum is <= 0,
* nondominance: minimize the coordinate sum over hull points below the
  query; the query is nondominated iff the optimum equals its own sum,
* proper nondominance: feasibility of weights lambda >= 1 with
  lambda . (w - y0) >= 0 for every generator w; the scaling lambda >= 1
  stands in for strict positivity, which the defining inequalities allow
  because they are positively homogeneous in lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptySet, NotInHull
from .numerics import EQ, GE, LE, OPTIMAL, linprog, lp_solve
from .numerics.rational import as_matrix, as_point

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class HullSet:
    """Generators W of the convex hull conv(W)."""

    generators: tuple[Point, ...]

    def __post_init__(self):
        if not self.generators:
            raise EmptySet("a hull needs at least one generator")

    @property
    def dim(self) -> int:
        return len(self.generators[0])


def hull(points) -> HullSet:
    return HullSet(as_matrix(points))


def _query(w: HullSet, y0) -> Point:
    point = as_point(y0)
    if len(point) != w.dim:
        raise DimensionMismatch(f"query dim {len(point)} vs hull dim {w.dim}")
    return point


def hull_contains(w: HullSet, y0) -> bool:
    """Does y0 admit convex weights over the generators?"""
    point = _query(w, y0)
    m = len(w.generators)
    rows = [([g[i] for g in w.generators], EQ, point[i]) for i in range(w.dim)]
    rows.append(([1] * m, EQ, 1))
    return lp_solve(linprog([0] * m, rows, lower=[0] * m)).status == OPTIMAL


def _gate(w: HullSet, y0) -> Point:
    point = _query(w, y0)
    if not hull_contains(w, point):
        raise NotInHull(f"query point {point} is outside the hull")
    return point


def _weakly_nondominated(w: HullSet, point: Point) -> bool:
    m, p = len(w.generators), w.dim
    # variables: convex weights mu_1..mu_m, then the free slack delta
    rows = [([1] * m + [0], EQ, 1)]
    for j in range(p):
        rows.append(([g[j] for g in w.generators] + [1], LE, point[j]))
    lp = linprog([0] * m + [-1], rows, lower=[0] * m + [None])
    outcome = lp_solve(lp)
    assert outcome.status == OPTIMAL  # hull is compact, delta is capped
    delta = outcome.point[-1]
    return delta <= 0


def hull_is_weakly_nondominated(w: HullSet, y0) -> bool:
    return _weakly_nondominated(w, _gate(w, y0))


def _nondominated(w: HullSet, point: Point) -> bool:
    m, p = len(w.generators), w.dim
    rows = [([1] * m, EQ, 1)]
    for j in range(p):
        rows.append(([g[j] for g in w.generators], LE, point[j]))
    column_sums = [sum(g, Fraction(0)) for g in w.generators]
    outcome = lp_solve(linprog(column_sums, rows, lower=[0] * m))
    assert outcome.status == OPTIMAL  # y0 itself is feasible
    return outcome.value == sum(point)


def hull_is_nondominated(w: HullSet, y0) -> bool:
    return _nondominated(w, _gate(w, y0))


@dataclass(frozen=True)
class ProperVerdict:
    verdict: bool
    witness: Point | None


def _properly_nondominated(w: HullSet, point: Point) -> ProperVerdict:
    p = w.dim
    rows = [
        ([g[j] - point[j] for j in range(p)], GE, 0) for g in w.generators
    ]
    outcome = lp_solve(linprog([0] * p, rows, lower=[1] * p))
    if outcome.status != OPTIMAL:
        return ProperVerdict(False, None)
    return ProperVerdict(True, outcome.point)


def hull_is_properly_nondominated(w: HullSet, y0) -> ProperVerdict:
    return _properly_nondominated(w, _gate(w, y0))
