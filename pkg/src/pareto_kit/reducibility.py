"""Pareto reducibility over the subproblems of a finite instance.

An instance is a label list plus an objective matrix.  For every nonempty
subset rho of the objectives, the efficient and properly efficient label
sets of the projected subproblem are computed exactly, and the union over
all 2^p - 1 subsets is compared with the weakly efficient set of the full
problem.  On finite images the inclusion "union inside weak" always holds;
equality can fail, and the report then lists the witnesses.  In hull mode
(convex image by construction) both sides must agree query by query, and a
disagreement aborts the run as an internal inconsistency.

Selector indices are 1-based throughout, matching objective names y1..yp.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._parallel import pmap
from .dominance import _dominated_flags, _unique_groups, _tradeoff_bound
from .errors import (
    DimensionMismatch,
    EmptySelector,
    EmptySet,
    InternalInconsistency,
    MalformedInput,
    NegativeWeight,
    NotInHull,
    TooManyObjectives,
    ZeroWeights,
)
from .hulls import (
    HullSet,
    _properly_nondominated,
    _weakly_nondominated,
    hull_contains,
)
from .numerics.rational import as_matrix, as_point, dot, rational_format

Point = tuple[Fraction, ...]
Selector = tuple[int, ...]

SELECTOR_CAP = 16


@dataclass(frozen=True)
class MopInstance:
    """Labeled decisions with their objective rows (n rows, p >= 2 columns)."""

    labels: tuple[str, ...]
    objectives: tuple[Point, ...]

    def __post_init__(self):
        if not self.objectives:
            raise EmptySet("an instance needs at least one row")
        if len(self.labels) != len(self.objectives):
            raise MalformedInput("labels and objective rows differ in count")
        if len(set(self.labels)) != len(self.labels):
            raise MalformedInput("labels must be unique")
        if len(self.objectives[0]) < 2:
            raise DimensionMismatch("an instance needs at least two objectives")

    @property
    def p(self) -> int:
        return len(self.objectives[0])


def mop_instance(labels, objectives) -> MopInstance:
    return MopInstance(tuple(labels), as_matrix(objectives))


def _selector(inst: MopInstance, rho) -> Selector:
    sel = tuple(sorted(set(int(i) for i in rho)))
    if not sel:
        raise EmptySelector("objective subset must be nonempty")
    if sel[0] < 1 or sel[-1] > inst.p:
        raise MalformedInput(f"selector {sel} outside 1..{inst.p}")
    return sel


def _project(rows: tuple[Point, ...], sel: Selector) -> list[Point]:
    return [tuple(row[i - 1] for i in sel) for row in rows]


def _nondominated_labels(inst: MopInstance, projected: list[Point], strict: bool):
    values, groups = _unique_groups(tuple(projected))
    flags = _dominated_flags(values, strict)
    labels = []
    survivors = set()
    for value, dominated in zip(values, flags):
        if not dominated:
            survivors.update(groups[value])
    for i, label in enumerate(inst.labels):
        if i in survivors:
            labels.append(label)
    return labels


def efficient_solutions(inst: MopInstance, rho) -> list[str]:
    """Labels whose projected rows are nondominated in the projected image."""
    sel = _selector(inst, rho)
    return _nondominated_labels(inst, _project(inst.objectives, sel), strict=False)


def weakly_efficient_solutions(inst: MopInstance) -> list[str]:
    """Labels whose rows no other row beats strictly in every objective."""
    return _nondominated_labels(inst, list(inst.objectives), strict=True)


def properly_efficient_solutions(inst: MopInstance, rho) -> dict[str, Fraction]:
    """Efficient labels of the subproblem with their trade-off bounds.

    On finite images proper efficiency coincides with efficiency and every
    bound is finite.  A single-objective selector degenerates to the argmin
    set, whose bound is zero by the empty-competitor convention.
    """
    sel = _selector(inst, rho)
    projected = _project(inst.objectives, sel)
    values, groups = _unique_groups(tuple(projected))
    flags = _dominated_flags(values, strict=False)
    out: dict[str, Fraction] = {}
    for value, dominated in zip(values, flags):
        if dominated:
            continue
        bound = _tradeoff_bound(values, value)
        for i in groups[value]:
            out[inst.labels[i]] = bound
    return out


def all_selectors(p: int) -> list[Selector]:
    """Every nonempty subset of 1..p in canonical (size, lexicographic) order."""
    out: list[Selector] = []
    for size in range(1, p + 1):
        out.extend(combinations(range(1, p + 1), size))
    return out


@dataclass(frozen=True)
class ReducibilityReport:
    we_set: tuple[str, ...]
    union_e: dict[str, Selector]
    union_pe: dict[str, Selector]
    equality_e: bool
    equality_pe: bool
    strict_witnesses: tuple[str, ...]


def reducibility_report(inst: MopInstance, max_objectives: int = SELECTOR_CAP) -> ReducibilityReport:
    """Compare the weakly efficient set against the subproblem unions."""
    if inst.p > max_objectives:
        raise TooManyObjectives(
            f"{inst.p} objectives exceed the enumeration cap {max_objectives}"
        )
    we = weakly_efficient_solutions(inst)
    union_e: dict[str, Selector] = {}
    union_pe: dict[str, Selector] = {}
    for sel in all_selectors(inst.p):
        for label in efficient_solutions(inst, sel):
            union_e.setdefault(label, sel)
        for label in properly_efficient_solutions(inst, sel):
            union_pe.setdefault(label, sel)
    we_set = set(we)
    if not set(union_pe) <= set(union_e) <= we_set:
        raise InternalInconsistency("subproblem unions escaped the weak set")
    strict = tuple(label for label in we if label not in union_e)
    return ReducibilityReport(
        we_set=tuple(we),
        union_e=union_e,
        union_pe=union_pe,
        equality_e=set(union_e) == we_set,
        equality_pe=set(union_pe) == we_set,
        strict_witnesses=strict,
    )


def weighted_sum_argmin(inst: MopInstance, weights) -> list[str]:
    """Labels minimizing the weighted objective sum (all ties included)."""
    lam = as_point(weights)
    if len(lam) != inst.p:
        raise DimensionMismatch("weight vector length differs from objectives")
    if any(w < 0 for w in lam):
        raise NegativeWeight("weights must be nonnegative")
    if all(w == 0 for w in lam):
        raise ZeroWeights("weights must not all be zero")
    scores = [dot(lam, row) for row in inst.objectives]
    best = min(scores)
    return [label for label, s in zip(inst.labels, scores) if s == best]


@dataclass(frozen=True)
class HullReducibilityRecord:
    query: Point
    lhs: bool
    rhs: bool
    witness: Selector | None


def hull_reducibility_check(
    w: HullSet, queries, max_objectives: int = SELECTOR_CAP
) -> list[HullReducibilityRecord]:
    """Check, per query, weak nondominance against the subset route.

    lhs: the query is weakly nondominated in conv(W).  rhs: some nonempty
    objective subset projects the query onto a properly nondominated point
    of the projected hull.  On hull instances the two are equivalent, so a
    mismatch means the solver itself failed and the run aborts.
    """
    if w.dim > max_objectives:
        raise TooManyObjectives(
            f"{w.dim} objectives exceed the enumeration cap {max_objectives}"
        )
    selectors = all_selectors(w.dim)

    def check_one(query) -> HullReducibilityRecord:
        point = as_point(query)
        if not hull_contains(w, point):
            raise NotInHull(f"query point {point} is outside the hull")
        lhs = _weakly_nondominated(w, point)
        rhs = False
        witness: Selector | None = None
        for sel in selectors:
            # projections of hull members stay in the projected hull, so
            # the membership gate can be skipped here
            sub_hull = HullSet(tuple(_project(w.generators, sel)))
            sub_query = tuple(point[i - 1] for i in sel)
            if _properly_nondominated(sub_hull, sub_query).verdict:
                rhs = True
                witness = sel
                break
        if lhs != rhs:
            raise InternalInconsistency(
                f"weak/proper reducibility mismatch at {point}: lhs={lhs} rhs={rhs}"
            )
        return HullReducibilityRecord(point, lhs, rhs, witness)

    return pmap(check_one, queries)


def instance_to_json(inst: MopInstance) -> dict:
    return {
        "labels": list(inst.labels),
        "objectives": [[rational_format(x) for x in row] for row in inst.objectives],
    }


def instance_from_json(data: dict) -> MopInstance:
    if not isinstance(data, dict) or "objectives" not in data:
        raise MalformedInput('instance JSON needs an "objectives" key')
    rows = data["objectives"]
    labels = data.get("labels")
    if labels is None:
        labels = [f"x{i + 1}" for i in range(len(rows))]
    return mop_instance(labels, rows)
