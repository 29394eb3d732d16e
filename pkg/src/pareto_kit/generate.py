"""Reproducible random instances for fuzzing and the CLI ``gen`` command.

All entries are exact rationals drawn from a seeded ``random.Random``;
identical parameters always reproduce identical instances.  Polyhedra come
in tagged families with known ground truth: "box", "orthant", and "tilted"
always have a nonempty frontier, "halfplane" never does, and "random" is
built around a known member point but otherwise unconstrained.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cones import PolyhedralCone
from .errors import SizeCap
from .hulls import HullSet
from .numerics.rational import dot
from .polyhedra import Polyhedron

POLY_FAMILIES = ("box", "orthant", "tilted", "halfplane", "random")

_P_RANGE = (2, 6)
_MAX_POINTS = 500
_MAX_ROWS = 64


def _check_sizes(p: int, count: int, cap: int) -> None:
    if not _P_RANGE[0] <= p <= _P_RANGE[1]:
        raise SizeCap(f"p={p} outside {_P_RANGE}")
    if not 1 <= count <= cap:
        raise SizeCap(f"size {count} outside 1..{cap}")


def _rat(rng: random.Random, span: int = 24, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def _coef(rng: random.Random, bound: int = 5) -> Fraction:
    """A coefficient in [-bound, bound] with a small denominator."""
    den = rng.randint(1, 3)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def _nonneg(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(0, span * 2), 2)


def gen_finite(p: int, n: int, seed: int) -> list[tuple[Fraction, ...]]:
    """n random points in dimension p; occasionally injects duplicates."""
    _check_sizes(p, n, _MAX_POINTS)
    rng = random.Random(repr(("finite", p, n, seed)))
    points = [tuple(_rat(rng) for _ in range(p)) for _ in range(n)]
    if n >= 2 and rng.random() < 0.25:
        points[rng.randrange(n)] = points[rng.randrange(n)]
    return points


def gen_hull(p: int, m: int, seed: int) -> HullSet:
    _check_sizes(p, m, _MAX_POINTS)
    rng = random.Random(repr(("hull", p, m, seed)))
    return HullSet(tuple(tuple(_rat(rng, span=12) for _ in range(p)) for _ in range(m)))


def gen_hull_queries(w: HullSet, count: int, seed: int) -> list[tuple[Fraction, ...]]:
    """Random members of conv(W): exact rational convex combinations."""
    rng = random.Random(repr(("queries", len(w.generators), count, seed)))
    queries = []
    m = len(w.generators)
    for _ in range(count):
        raw = [rng.randint(0, 6) for _ in range(m)]
        if not any(raw):
            raw[rng.randrange(m)] = 1
        total = sum(raw)
        mu = [Fraction(v, total) for v in raw]
        queries.append(
            tuple(
                sum((mu[k] * w.generators[k][j] for k in range(m)), Fraction(0))
                for j in range(w.dim)
            )
        )
    return queries


def gen_cone(p: int, m: int, seed: int) -> PolyhedralCone:
    """A pointed proper cone: every generator has positive product with a
    hidden positive direction, which rules out any line."""
    _check_sizes(p, m, _MAX_POINTS)
    rng = random.Random(repr(("cone", p, m, seed)))
    hidden = tuple(Fraction(rng.randint(1, 4)) for _ in range(p))
    norm = dot(hidden, hidden)
    generators = []
    for _ in range(m):
        g = [_rat(rng, span=6) for _ in range(p)]
        score = dot(hidden, g)
        if score <= 0:
            shift = (1 - score) / norm
            g = [x + shift * h for x, h in zip(g, hidden)]
        generators.append(tuple(g))
    return PolyhedralCone(tuple(generators))


def gen_poly(p: int, m: int, seed: int, family: str = "random"):
    """A nonempty polyhedron with a known member point.

    Returns (polyhedron, tag, member).  The tag records the family ground
    truth: "nonempty-frontier", "empty-frontier", or "unknown".
    """
    _check_sizes(p, m, _MAX_ROWS)
    if family not in POLY_FAMILIES:
        raise SizeCap(f"unknown family {family!r}; pick one of {POLY_FAMILIES}")
    rng = random.Random(repr(("poly", p, m, seed, family)))
    member = tuple(_coef(rng) for _ in range(p))

    rows: list[tuple[Fraction, ...]] = []
    rhs: list[Fraction] = []

    def add(row, value):
        rows.append(tuple(row))
        rhs.append(value)

    def add_through_member(count, keep_direction=None):
        """Rows a . y <= a . member + slack; optional recession direction
        d is preserved by forcing a . d <= 0."""
        for _ in range(count):
            row = [_coef(rng) for _ in range(p)]
            if all(x == 0 for x in row):
                row[rng.randrange(p)] = Fraction(1)
            if keep_direction is not None and dot(row, keep_direction) > 0:
                row = [-x for x in row]
            add(row, dot(row, member) + _nonneg(rng))

    zero = Fraction(0)
    if family == "box":
        for j in range(p):
            unit = [zero] * p
            unit[j] = Fraction(-1)
            add(unit, -(member[j] - _nonneg(rng)))
            unit = [zero] * p
            unit[j] = Fraction(1)
            add(unit, member[j] + _nonneg(rng))
        tag = "nonempty-frontier"
    elif family == "orthant":
        for j in range(p):
            unit = [zero] * p
            unit[j] = Fraction(-1)
            add(unit, -(member[j] - _nonneg(rng)))
        add_through_member(max(0, m - p))
        tag = "nonempty-frontier"
    elif family == "tilted":
        # w . y >= c with w strictly positive pins down every lower section
        w = [Fraction(rng.randint(1, 5)) for _ in range(p)]
        add([-x for x in w], -(dot(w, member) - _nonneg(rng)))
        add_through_member(max(0, m - 1))
        tag = "nonempty-frontier"
    elif family == "halfplane":
        j = rng.randrange(p)
        keep = rng.randrange(p - 1)
        keep = keep if keep < j else keep + 1
        direction = [zero] * p
        direction[keep] = Fraction(-1)
        unit = [zero] * p
        unit[j] = Fraction(-1)
        add(unit, -(member[j] - _nonneg(rng)))
        add_through_member(max(0, m - 1), keep_direction=tuple(direction))
        tag = "empty-frontier"
    else:
        add_through_member(m)
        tag = "unknown"

    return Polyhedron(tuple(rows), tuple(rhs)), tag, member
