"""Constructive external stability for finite point sets.

For a dominated point y0 the auxiliary problem "minimize the coordinate
sum over points below y0" always lands on a nondominated point; its cone
variant minimizes d . y over the points cone-below y0 for a direction d
with strictly positive products against the cone.  Both are computed by
exact enumeration with a lexicographic tie-break, and assembled into a
certificate mapping every index to a nondominated dominator index, which
can be re-verified without re-running the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._parallel import pmap
from .cones import PolyhedralCone, cone_contains, strictly_positive_direction
from .dominance import (
    _checked,
    _unique_groups,
    cone_nondominated_set,
    nondominated_set,
)
from .errors import DimensionMismatch, NotMember
from .numerics import dot
from .numerics.rational import as_point, rational_format

Point = tuple[Fraction, ...]


def find_dominator(points, y0) -> Point:
    """Minimizer of the coordinate sum over {y in Y : y <= y0}.

    Ties on the sum are broken by the lexicographically smallest point.
    The result is always nondominated: anything below it would have had a
    strictly smaller coordinate sum while staying feasible.
    """
    pts = _checked(points)
    ref = as_point(y0)
    if ref not in pts:
        raise NotMember("reference point is not in the set")
    values, _ = _unique_groups(pts)
    feasible = [y for y in values if all(a <= b for a, b in zip(y, ref))]
    return min(feasible, key=lambda y: (sum(y), y))


def find_dominator_cone(points, ordering: PolyhedralCone, y0, direction=None) -> Point:
    """Minimizer of d . y over the points cone-below y0.

    ``direction`` defaults to a synthesized strictly positive direction of
    the cone; a caller-supplied one must have positive product with every
    generator.  Ties are broken lexicographically.
    """
    pts = _checked(points)
    ref = as_point(y0)
    if ordering.dim != len(ref):
        raise DimensionMismatch("cone and point dimensions differ")
    if ref not in pts:
        raise NotMember("reference point is not in the set")
    if direction is None:
        d = strictly_positive_direction(ordering)
    else:
        d = as_point(direction)
        if any(dot(d, g) <= 0 for g in ordering.generators):
            raise ValueError("supplied direction is not strictly positive on the cone")
        strictly_positive_direction(ordering)  # still reject non-pointed cones
    values, _ = _unique_groups(pts)
    d_ref = dot(d, ref)
    feasible = []
    for y in values:
        if y == ref:
            feasible.append(y)
            continue
        if dot(d, y) >= d_ref:  # membership of ref - y != 0 forces d.y < d.ref
            continue
        if cone_contains(ordering, tuple(a - b for a, b in zip(ref, y))):
            feasible.append(y)
    return min(feasible, key=lambda y: (dot(d, y), y))


@dataclass(frozen=True)
class DominatorCertificate:
    """Checkable evidence that every point is covered by a nondominated one.

    assignments maps each index of the input to the index of its dominator;
    nondominated points map to themselves.
    """

    assignments: dict[int, int]
    cone: PolyhedralCone | None = None
    direction: Point | None = None


def external_stability_certificate(
    points, ordering: PolyhedralCone | None = None, direction=None
) -> DominatorCertificate:
    pts = _checked(points)
    if ordering is not None and direction is None:
        direction = strictly_positive_direction(ordering)
    first_index = {}
    for i, point in enumerate(pts):
        first_index.setdefault(point, i)

    if ordering is None:
        solve = lambda point: find_dominator(pts, point)
    else:
        solve = lambda point: find_dominator_cone(pts, ordering, point, direction)
    dominators = pmap(solve, pts)

    assignments: dict[int, int] = {}
    for i, (point, dominator) in enumerate(zip(pts, dominators)):
        assignments[i] = i if dominator == point else first_index[dominator]
    return DominatorCertificate(
        assignments=assignments,
        cone=ordering,
        direction=None if direction is None else as_point(direction),
    )


def verify_certificate(points, certificate: DominatorCertificate) -> bool:
    """Re-check a certificate from scratch.

    Confirms totality, that every dominator is (cone-)nondominated, that it
    (cone-)dominates or equals its source, idempotence, and that
    nondominated sources map to themselves.
    """
    pts = _checked(points)
    assignments = certificate.assignments
    if sorted(assignments) != list(range(len(pts))):
        return False
    if certificate.cone is None:
        frontier = set(nondominated_set(pts))
        below = lambda a, b: all(x <= y for x, y in zip(a, b))
    else:
        frontier = set(cone_nondominated_set(pts, certificate.cone))
        below = lambda a, b: a == b or cone_contains(
            certificate.cone, tuple(y - x for x, y in zip(a, b))
        )
    for i, j in assignments.items():
        if j not in frontier:
            return False
        if not below(pts[j], pts[i]):
            return False
        if assignments[j] != j:
            return False
        if i in frontier and j != i:
            return False
    return True


def certificate_to_json(certificate: DominatorCertificate) -> dict:
    from .cones import cone_to_json

    data: dict = {
        "cone": None if certificate.cone is None else cone_to_json(certificate.cone),
        "assignments": [
            {"from": i + 1, "to": j + 1}
            for i, j in sorted(certificate.assignments.items())
        ],
    }
    if certificate.direction is not None:
        data["direction"] = [rational_format(x) for x in certificate.direction]
    return data


def certificate_from_json(data: dict) -> DominatorCertificate:
    from .cones import cone_from_json
    from .errors import MalformedInput
    from .numerics.rational import rational_parse

    if not isinstance(data, dict) or "assignments" not in data:
        raise MalformedInput('certificate JSON needs an "assignments" key')
    ordering = None if data.get("cone") is None else cone_from_json(data["cone"])
    direction = data.get("direction")
    return DominatorCertificate(
        assignments={
            entry["from"] - 1: entry["to"] - 1 for entry in data["assignments"]
        },
        cone=ordering,
        direction=None
        if direction is None
        else tuple(rational_parse(x) for x in direction),
    )
