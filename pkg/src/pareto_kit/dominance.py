"""Exact classification of finite point sets.

Nondominated, weakly nondominated, and properly nondominated subsets are
computed by pairwise enumeration over the distinct values (duplicates of a
surviving value are all reported; exact duplicates never dominate each
other).  The trade-off bound attached to each nondominated point is the
least constant that caps every improvement/deterioration ratio against it.

The pairwise scan is the second hot loop of the package; when the compiled
kernel importable as ``pareto_kit._kernels`` is present and all values fit
in 64 bits it runs there, otherwise in the pure loops below.  Both paths
compute the same flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import PolyhedralCone, cone_contains, strictly_positive_direction
from .errors import DimensionMismatch, EmptySet, NotMember, NotNondominated
from .numerics import dot
from .numerics.rational import as_matrix, as_point

try:
    from pareto_kit import _kernels as _compiled
except ImportError:
    _compiled = None

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSet:
    """A finite list of equal-dimension points, duplicates permitted."""

    points: tuple[Point, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not self.points:
            raise EmptySet("a point set needs at least one point")
        if self.labels is not None and len(self.labels) != len(self.points):
            raise DimensionMismatch("labels and points differ in count")

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def duplicate_groups(self) -> list[list[int]]:
        """Index groups sharing an identical value (groups of size >= 2)."""
        seen: dict[Point, list[int]] = {}
        for i, point in enumerate(self.points):
            seen.setdefault(point, []).append(i)
        return [group for group in seen.values() if len(group) > 1]


def point_set(points, labels=None) -> PointSet:
    matrix = as_matrix(points)
    if not matrix:
        raise EmptySet("a point set needs at least one point")
    return PointSet(matrix, None if labels is None else tuple(labels))


def _checked(points) -> tuple[Point, ...]:
    if isinstance(points, PointSet):
        return points.points
    matrix = as_matrix(points)
    if not matrix:
        raise EmptySet("a point set needs at least one point")
    return matrix


def _unique_groups(points: tuple[Point, ...]):
    groups: dict[Point, list[int]] = {}
    for i, point in enumerate(points):
        groups.setdefault(point, []).append(i)
    values = list(groups)
    return values, groups


def _dominated_flags_pure(values: list[Point], strict: bool) -> list[bool]:
    n = len(values)
    flags = [False] * n
    for i in range(n):
        yi = values[i]
        for j in range(n):
            if j == i:
                continue
            yj = values[j]
            if strict:
                if all(a < b for a, b in zip(yj, yi)):
                    flags[i] = True
                    break
            else:
                # values are distinct, so <= everywhere already implies <=, !=
                if all(a <= b for a, b in zip(yj, yi)):
                    flags[i] = True
                    break
    return flags


def _dominated_flags(values: list[Point], strict: bool) -> list[bool]:
    if _compiled is not None and len(values) > 1:
        try:
            nums = [[c.numerator for c in row] for row in values]
            dens = [[c.denominator for c in row] for row in values]
            return _compiled.dominated_flags(nums, dens, strict)
        except OverflowError:
            pass
    return _dominated_flags_pure(values, strict)


def _surviving_indices(points: tuple[Point, ...], strict: bool) -> list[int]:
    values, groups = _unique_groups(points)
    flags = _dominated_flags(values, strict)
    out: list[int] = []
    for value, dominated in zip(values, flags):
        if not dominated:
            out.extend(groups[value])
    return sorted(out)


def nondominated_set(points) -> list[int]:
    """Indices whose value no other value is <= to (and distinct from)."""
    return _surviving_indices(_checked(points), strict=False)


def weakly_nondominated_set(points) -> list[int]:
    """Indices whose value no other value beats strictly in every coordinate."""
    return _surviving_indices(_checked(points), strict=True)


def _tradeoff_bound(values: list[Point], y0: Point) -> Fraction:
    """Least M capping (y0_i - y_i)/(y_j - y0_j) for all competitors.

    For every competing value y and coordinate i improving on y0, the best
    compensating coordinate j is used; y0 nondominated guarantees such a j
    exists.  Zero when no competitor improves anywhere.
    """
    bound = Fraction(0)
    p = len(y0)
    for y in values:
        if y == y0:
            continue
        worse = [j for j in range(p) if y[j] > y0[j]]
        for i in range(p):
            if y[i] < y0[i]:
                assert worse, "dominated reference point"
                ratio = min((y0[i] - y[i]) / (y[j] - y0[j]) for j in worse)
                if ratio > bound:
                    bound = ratio
    return bound


def geoffrion_bound(points, y0) -> Fraction:
    """Least valid trade-off constant for a nondominated member y0."""
    pts = _checked(points)
    ref = as_point(y0)
    if len(ref) != len(pts[0]):
        raise DimensionMismatch("reference point dimension mismatch")
    if ref not in pts:
        raise NotMember("reference point is not in the set")
    values, _ = _unique_groups(pts)
    flags = _dominated_flags(values, strict=False)
    if flags[values.index(ref)]:
        raise NotNondominated("reference point is dominated")
    return _tradeoff_bound(values, ref)


@dataclass(frozen=True)
class DominanceReport:
    nondominated: tuple[int, ...]
    weakly_nondominated: tuple[int, ...]
    properly_nondominated: tuple[int, ...]
    bounds: dict[int, Fraction]


def properly_nondominated_set(points) -> DominanceReport:
    """Full classification of a finite set.

    On finite sets every nondominated point is properly nondominated: the
    ratios range over a finite set, so their maximum is a finite bound.
    The report carries that bound per nondominated index.
    """
    pts = _checked(points)
    values, groups = _unique_groups(pts)
    flags = _dominated_flags(values, strict=False)
    weak = _surviving_indices(pts, strict=True)
    nondominated: list[int] = []
    bounds: dict[int, Fraction] = {}
    for value, dominated in zip(values, flags):
        if dominated:
            continue
        bound = _tradeoff_bound(values, value)
        for i in groups[value]:
            nondominated.append(i)
            bounds[i] = bound
    nondominated.sort()
    return DominanceReport(
        nondominated=tuple(nondominated),
        weakly_nondominated=tuple(weak),
        properly_nondominated=tuple(nondominated),
        bounds=bounds,
    )


def cone_nondominated_set(points, ordering: PolyhedralCone) -> list[int]:
    """Indices not dominated under the generalized cone order.

    A value y is dominated when some distinct value z has y - z in the
    cone.  Membership tests run one small LP per candidate pair, after a
    cheap exact prefilter: d . (y - z) must be positive for the strictly
    positive direction d of the cone.
    """
    pts = _checked(points)
    if ordering.dim != len(pts[0]):
        raise DimensionMismatch(
            f"cone dim {ordering.dim} vs point dim {len(pts[0])}"
        )
    direction = strictly_positive_direction(ordering)
    values, groups = _unique_groups(pts)
    weights = [dot(direction, v) for v in values]
    cache: dict[Point, bool] = {}

    def in_cone(diff: Point) -> bool:
        hit = cache.get(diff)
        if hit is None:
            hit = cone_contains(ordering, diff)
            cache[diff] = hit
        return hit

    out: list[int] = []
    for i, yi in enumerate(values):
        dominated = False
        for j, yj in enumerate(values):
            if i == j or weights[j] >= weights[i]:
                continue
            if in_cone(tuple(a - b for a, b in zip(yi, yj))):
                dominated = True
                break
        if not dominated:
            out.extend(groups[yi])
    return sorted(out)
