"""Recession analysis of polyhedral image sets.

A polyhedron A y <= b is closed and convex by construction, which is the
setting where nonemptiness of the nondominated set, boundedness of the
lower sections, cone compactness, cone semicompactness, and external
stability all stand or fall together.  The report computes nonemptiness by
two independent routes and errors out if they ever disagree:

* route (a): a nonzero direction d <= 0 with A d <= 0 exists iff every
  point can be pushed down forever, i.e. the frontier is empty,
* route (b): when (a) reports nonempty, minimize the coordinate sum over a
  lower section to produce a concrete frontier point, then certify its
  nondominance with a second LP.

Frontier connectivity is probed by sampling: weighted-sum minima over a
simplex grid of strictly positive weights, joined when within a radius.
Radii compare through their squares so the Euclidean metric never forces
irrational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    EmptyFrontier,
    EmptyPolyhedron,
    InternalInconsistency,
    InvalidEpsilon,
    MalformedInput,
    NotMember,
)
from .hulls import HullSet
from .numerics import EQ, LE, OPTIMAL, LpOutcome, dot, linprog, lp_solve
from .numerics.linprog import lp_solve_batch
from .numerics.rational import as_matrix, as_point, rational_format

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Polyhedron:
    """The solution set of A y <= b."""

    A: tuple[Point, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.A:
            raise MalformedInput("a polyhedron needs at least one inequality")
        if len(self.A) != len(self.b):
            raise MalformedInput("matrix and right-hand side differ in row count")

    @property
    def dim(self) -> int:
        return len(self.A[0])

    def contains(self, y) -> bool:
        point = as_point(y)
        return all(dot(row, point) <= rhs for row, rhs in zip(self.A, self.b))


def polyhedron(A, b) -> Polyhedron:
    matrix = as_matrix(A)
    rhs = as_point(b)
    return Polyhedron(matrix, rhs)


@lru_cache(maxsize=None)
def feasible_point(P: Polyhedron) -> Point | None:
    """Some exact member of P, or None when P is empty.  Deterministic."""
    rows = [(list(row), LE, rhs) for row, rhs in zip(P.A, P.b)]
    outcome = lp_solve(linprog([0] * P.dim, rows))
    return outcome.point if outcome.status == OPTIMAL else None


def _require_nonempty(P: Polyhedron) -> Point:
    base = feasible_point(P)
    if base is None:
        raise EmptyPolyhedron("the inequality system has no solution")
    return base


@dataclass(frozen=True)
class RecessionCone:
    """Directions d with A d <= 0 (the zero direction included)."""

    A: tuple[Point, ...]
    sample_directions: tuple[Point, ...]

    def contains(self, d) -> bool:
        point = as_point(d)
        return all(dot(row, point) <= 0 for row in self.A)


def recession_cone(P: Polyhedron) -> RecessionCone:
    """The recession cone of a nonempty P, with a few sampled rays.

    Rays are found by minimizing +-1 times each coordinate over the cone
    intersected with the unit box; nonzero optima are kept.
    """
    _require_nonempty(P)
    p = P.dim
    rows = [(list(row), LE, 0) for row in P.A]
    rays: list[Point] = []
    for i in range(p):
        for sign in (1, -1):
            objective = [0] * p
            objective[i] = sign
            outcome = lp_solve(
                linprog(objective, rows, lower=[-1] * p, upper=[1] * p)
            )
            assert outcome.status == OPTIMAL
            if outcome.value < 0 and outcome.point not in rays:
                rays.append(outcome.point)
    return RecessionCone(P.A, tuple(rays))


@lru_cache(maxsize=None)
def negative_recession_direction(P: Polyhedron) -> Point | None:
    """A direction d != 0 with A d <= 0 and d <= 0, or None.

    Normalized so the coordinates sum to -1.  Its existence certifies an
    empty frontier: adding d strictly improves every point of P forever.
    """
    _require_nonempty(P)
    p = P.dim
    rows = [(list(row), LE, 0) for row in P.A]
    rows.append(([1] * p, EQ, -1))
    outcome = lp_solve(linprog([0] * p, rows, upper=[0] * p))
    return outcome.point if outcome.status == OPTIMAL else None


def lower_section_bounded(P: Polyhedron, y0) -> bool:
    """Is {y in P : y <= y0} bounded?

    The section's recession cone is {d : A d <= 0, d <= 0} regardless of
    y0, so the verdict is shared by every member point; membership of y0 is
    still required.
    """
    _require_nonempty(P)
    point = as_point(y0)
    if not P.contains(point):
        raise NotMember(f"{point} is not in the polyhedron")
    return negative_recession_direction(P) is None


def _section_minima(P: Polyhedron, anchor: Point, weight_list) -> list[LpOutcome]:
    """Minimize each weight vector over {y in P : y <= anchor}.

    Solved in the substituted variable s = anchor - y >= 0, which keeps
    the tableau small (p nonnegative variables, the original m rows) and
    lets the whole batch share one standardization.
    """
    p = P.dim
    rows = [
        ([-a for a in row], LE, rhs - dot(row, anchor))
        for row, rhs in zip(P.A, P.b)
    ]
    raw = lp_solve_batch(
        [[-w for w in lam] for lam in weight_list], rows, lower=[0] * p
    )
    outcomes = []
    for lam, outcome in zip(weight_list, raw):
        if outcome.status != OPTIMAL:
            outcomes.append(outcome)
            continue
        point = tuple(a - s for a, s in zip(anchor, outcome.point))
        outcomes.append(LpOutcome(OPTIMAL, dot(lam, anchor) + outcome.value, point))
    return outcomes


def _section_minimum(P: Polyhedron, anchor: Point, weights=None):
    lam = tuple(Fraction(1) for _ in range(P.dim)) if weights is None else tuple(weights)
    return _section_minima(P, anchor, [lam])[0]


@dataclass(frozen=True)
class EquivalenceReport:
    """Joint verdict on the five structural properties; all flags agree."""

    y_n_nonempty: bool
    witness: Point | None
    negative_direction: Point | None
    sections_bounded: bool
    cone_compact: bool
    cone_semicompact: bool
    externally_stable: bool
    justification: tuple[tuple[str, str], ...]

    def all_flags(self) -> tuple[bool, ...]:
        return (
            self.y_n_nonempty,
            self.sections_bounded,
            self.cone_compact,
            self.cone_semicompact,
            self.externally_stable,
        )


def theorem_full_report(P: Polyhedron, samples=()) -> EquivalenceReport:
    """Decide the five-way equivalence on a nonempty polyhedron.

    Nonemptiness of the frontier is computed twice: by the recession route
    and, when that route says nonempty, by producing and certifying an
    actual nondominated point.  Disagreement between the routes, or between
    nonemptiness and section boundedness, raises InternalInconsistency; it
    would mean the LP kernel itself is wrong.
    """
    base = _require_nonempty(P)
    sample_points = [as_point(s) for s in samples]
    for s in sample_points:
        if not P.contains(s):
            raise NotMember(f"sample {s} is not in the polyhedron")
    anchor = sample_points[0] if sample_points else base

    direction = negative_recession_direction(P)
    nonempty = direction is None

    witness: Point | None = None
    if nonempty:
        outcome = _section_minimum(P, anchor)
        if outcome.status != OPTIMAL:
            raise InternalInconsistency(
                "recession route says bounded but the section LP is unbounded"
            )
        witness = outcome.point
        certify = _section_minimum(P, witness)
        if certify.status != OPTIMAL or certify.value != sum(witness):
            raise InternalInconsistency(
                "witness produced by the section LP failed its nondominance check"
            )

    bounded_votes = [
        lower_section_bounded(P, s) for s in (sample_points or [anchor])
    ]
    sections_bounded = all(bounded_votes)
    if sections_bounded != nonempty:
        raise InternalInconsistency("nonemptiness and boundedness disagree")

    return EquivalenceReport(
        y_n_nonempty=nonempty,
        witness=witness,
        negative_direction=direction,
        sections_bounded=sections_bounded,
        cone_compact=sections_bounded,
        cone_semicompact=sections_bounded,
        externally_stable=sections_bounded,
        justification=(
            ("y_n_nonempty", "recession direction and certified witness"),
            ("sections_bounded", "recession direction at every sample"),
            ("cone_compact", "equivalent to bounded sections"),
            ("cone_semicompact", "implied by cone compactness"),
            ("externally_stable", "implied by cone semicompactness"),
        ),
    )


@dataclass(frozen=True)
class RedundancyReport:
    """Checks that a nonempty frontier already forces bounded sections.

    When the frontier is empty the claim is vacuous and the report says so.
    """

    applicable: bool
    witness: Point | None
    sections_checked: int
    sections_bounded: bool | None
    cone_compact: bool | None
    cone_semicompact: bool | None
    externally_stable: bool | None
    connected: bool | None
    passed: bool


def redundancy_demonstration(P: Polyhedron, samples=()) -> RedundancyReport:
    report = theorem_full_report(P, samples)
    sample_points = [as_point(s) for s in samples]
    if not report.y_n_nonempty:
        return RedundancyReport(
            applicable=False,
            witness=None,
            sections_checked=0,
            sections_bounded=None,
            cone_compact=None,
            cone_semicompact=None,
            externally_stable=None,
            connected=None,
            passed=True,
        )
    checks = sample_points or [report.witness]
    bounded = all(lower_section_bounded(P, s) for s in checks)
    return RedundancyReport(
        applicable=True,
        witness=report.witness,
        sections_checked=len(checks),
        sections_bounded=bounded,
        cone_compact=bounded,
        cone_semicompact=bounded,
        externally_stable=bounded,
        connected=bounded,
        passed=bounded,
    )


def _simplex_grid(p: int, k: int) -> list[tuple[Fraction, ...]]:
    """Weight vectors (n_1/k, ..., n_p/k) with integer n_i >= 1 summing to k."""
    out: list[tuple[Fraction, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            if remaining >= 1:
                out.append(tuple(Fraction(v, k) for v in prefix + [remaining]))
            return
        for v in range(1, remaining - (slots - 1) + 1):
            rec(prefix + [v], remaining - v, slots - 1)

    rec([], k, p)
    return out


def _distance_sq(a: Point, b: Point) -> Fraction:
    return sum(((x - y) * (x - y) for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class ConnectivityReport:
    samples: tuple[Point, ...]
    grid: int
    epsilon_sq: Fraction
    component_count: int
    components: tuple[int, ...]


def frontier_sample_connected(source, grid: int, epsilon=None, anchor=None) -> ConnectivityReport:
    """Sample frontier points on a weight grid and count proximity components.

    Hull sources are sampled by exact weighted-sum minimization over the
    generators.  Polyhedral sources must classify all-true first; their
    samples minimize each weight over the lower section of an anchor
    member, which keeps every grid LP bounded and still lands on globally
    nondominated points.  The default radius is four times the largest gap
    between consecutive distinct samples, carried as its square.
    """
    if grid < 1:
        raise MalformedInput("grid must be at least 1")
    if isinstance(source, HullSet):
        p = source.dim
    elif isinstance(source, Polyhedron):
        p = source.dim
    else:
        raise MalformedInput("source must be a HullSet or a Polyhedron")

    weights = _simplex_grid(p, grid)
    if not weights:
        raise EmptyFrontier(
            f"grid {grid} admits no strictly positive weights in dimension {p}"
        )

    if isinstance(source, HullSet):
        optima = []
        for lam in weights:
            scores = [dot(lam, g) for g in source.generators]
            optima.append(source.generators[scores.index(min(scores))])
    else:
        report = theorem_full_report(source)
        if not report.y_n_nonempty:
            raise EmptyFrontier("the polyhedron has an empty frontier")
        base = as_point(anchor) if anchor is not None else feasible_point(source)
        if anchor is not None and not source.contains(base):
            raise NotMember(f"anchor {base} is not in the polyhedron")
        outcomes = _section_minima(source, base, weights)
        assert all(o.status == OPTIMAL for o in outcomes)  # section is compact
        optima = [o.point for o in outcomes]

    samples: list[Point] = []
    for point in optima:
        if point not in samples:
            samples.append(point)

    if epsilon is not None:
        from .numerics.rational import as_fraction

        eps = as_fraction(epsilon)
        if eps <= 0:
            raise InvalidEpsilon("epsilon must be positive")
        epsilon_sq = eps * eps
    elif len(samples) >= 2:
        epsilon_sq = 16 * max(
            _distance_sq(a, b) for a, b in zip(samples, samples[1:])
        )
    else:
        epsilon_sq = Fraction(1)

    parent = list(range(len(samples)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(samples)):
        for j in range(i + 1, len(samples)):
            if _distance_sq(samples[i], samples[j]) <= epsilon_sq:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    component_of: dict[int, int] = {}
    components: list[int] = []
    for i in range(len(samples)):
        root = find(i)
        if root not in component_of:
            component_of[root] = len(component_of) + 1
        components.append(component_of[root])

    return ConnectivityReport(
        samples=tuple(samples),
        grid=grid,
        epsilon_sq=epsilon_sq,
        component_count=len(component_of),
        components=tuple(components),
    )


def polyhedron_to_json(P: Polyhedron) -> dict:
    return {
        "A": [[rational_format(x) for x in row] for row in P.A],
        "b": [rational_format(x) for x in P.b],
    }


def polyhedron_from_json(data: dict) -> Polyhedron:
    if not isinstance(data, dict) or "A" not in data or "b" not in data:
        raise MalformedInput('polyhedron JSON needs "A" and "b" keys')
    return polyhedron(data["A"], data["b"])
