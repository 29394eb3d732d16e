"""Deterministic exact linear programming.

Every geometric decision in the package (dominance over a cone, hull
membership, boundedness of a lower section) reduces to a small linear
program solved here with a two-phase simplex over exact rationals and
Bland's pivot rule.  Outcomes are therefore exact and reproducible:
identical inputs give identical statuses, values, and points.

Two kernels can execute the pivot loop: the pure-Python reference lane and
an optional compiled lane built from ``_kernels.pyx``.  The compiled lane
stores entries as 64-bit numerator/denominator pairs and raises
OverflowError when a reduced value leaves that range, in which case the
solve is rerun on the pure lane.  Both lanes take identical pivot
decisions, so the outcome never depends on which lane ran.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionMismatch
from . import _simplex_py
from .rational import as_fraction

try:
    from pareto_kit import _kernels as _compiled
except ImportError:  # pure-Python install
    _compiled = None

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """Minimize objective . x subject to rows and optional variable bounds."""

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    lower: tuple[Fraction | None, ...] | None = None
    upper: tuple[Fraction | None, ...] | None = None

    def __post_init__(self):
        n = len(self.objective)
        if n == 0:
            raise DimensionMismatch("a linear program needs at least one variable")
        for con in self.constraints:
            if len(con.coeffs) != n:
                raise DimensionMismatch(
                    f"constraint has {len(con.coeffs)} coefficients, expected {n}"
                )
            if con.relation not in _RELATIONS:
                raise ValueError(f"unknown relation {con.relation!r}")
        for bounds in (self.lower, self.upper):
            if bounds is not None and len(bounds) != n:
                raise DimensionMismatch("bounds length does not match variable count")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None


def linprog(objective, rows, lower=None, upper=None) -> LinearProgram:
    """Build a LinearProgram, coercing int/str entries to exact fractions.

    ``rows`` is an iterable of (coefficients, relation, rhs) triples.
    """
    obj = tuple(as_fraction(c) for c in objective)
    cons = tuple(
        Constraint(tuple(as_fraction(c) for c in coeffs), rel, as_fraction(rhs))
        for coeffs, rel, rhs in rows
    )

    def _bounds(values):
        if values is None:
            return None
        return tuple(None if v is None else as_fraction(v) for v in values)

    return LinearProgram(obj, cons, _bounds(lower), _bounds(upper))


_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class _Standardized:
    tableau: list[list[Fraction]]
    nrows: int
    n_real: int
    n_std: int
    basis: list[int]
    has_artificial: bool
    var_map: list[tuple]
    offset: Fraction


@dataclass
class _Template:
    """Objective-independent part of a standardized program.

    The constraint rows, initial basis, and phase-1 cost row depend only
    on the rows and bounds, so a batch of programs differing in the
    objective can share one template.
    """

    rows: list[list[Fraction]]
    cost1: list[Fraction]
    nrows: int
    n_real: int
    n_std: int
    n_slack: int
    n_art: int
    basis: list[int]
    var_map: list[tuple]


def _standardize_rows(n, constraints, lower, upper) -> _Template:
    """Rewrite the constraint system as Ax = b, x >= 0, b >= 0.

    Lower-bounded variables are shifted; unbounded ones are split into a
    positive and a negative part.  Upper bounds become extra rows.  Rows
    whose own slack survives with coefficient +1 start basic; every other
    row receives an artificial variable for phase 1.
    """
    lower = lower if lower is not None else (None,) * n
    upper = upper if upper is not None else (None,) * n

    var_map: list[tuple] = []
    n_std = 0
    for j in range(n):
        if lower[j] is not None:
            var_map.append(("shift", n_std, lower[j]))
            n_std += 1
        else:
            var_map.append(("split", n_std, n_std + 1))
            n_std += 2

    def to_std(coeffs):
        out = [_ZERO] * n_std
        shift = _ZERO
        for j, a in enumerate(coeffs):
            if a == 0:
                continue
            kind = var_map[j]
            if kind[0] == "shift":
                out[kind[1]] = a
                shift += a * kind[2]
            else:
                out[kind[1]] = a
                out[kind[2]] = -a
        return out, shift

    raw_rows: list[tuple[list[Fraction], str, Fraction]] = []
    for con in constraints:
        coeffs, shift = to_std(con.coeffs)
        raw_rows.append((coeffs, con.relation, con.rhs - shift))
    for j in range(n):
        if upper[j] is None:
            continue
        unit = [_ZERO] * n
        unit[j] = _ONE
        coeffs, shift = to_std(unit)
        raw_rows.append((coeffs, LE, upper[j] - shift))

    nrows = len(raw_rows)
    slack_of: list[int | None] = [None] * nrows
    n_slack = 0
    for r, (_, rel, _) in enumerate(raw_rows):
        if rel != EQ:
            slack_of[r] = n_slack
            n_slack += 1
    n_real = n_std + n_slack

    eq_rows: list[list[Fraction]] = []
    for r, (coeffs, rel, rhs) in enumerate(raw_rows):
        row = coeffs + [_ZERO] * n_slack
        if slack_of[r] is not None:
            row[n_std + slack_of[r]] = _ONE if rel == LE else -_ONE
        row.append(rhs)
        if rhs < 0:
            row = [-x for x in row]
        eq_rows.append(row)

    basis: list[int] = []
    art_col_of: list[int | None] = [None] * nrows
    n_art = 0
    for r in range(nrows):
        own = slack_of[r]
        if own is not None and eq_rows[r][n_std + own] == 1:
            basis.append(n_std + own)
        else:
            art_col_of[r] = n_art
            basis.append(n_real + n_art)
            n_art += 1

    tableau: list[list[Fraction]] = []
    for r in range(nrows):
        body, rhs = eq_rows[r][:-1], eq_rows[r][-1]
        full = body + [_ZERO] * n_art + [rhs]
        if art_col_of[r] is not None:
            full[n_real + art_col_of[r]] = _ONE
        tableau.append(full)

    ncols = n_real + n_art + 1
    cost1 = [_ZERO] * ncols
    for r in range(nrows):
        if art_col_of[r] is not None:
            cost1[n_real + art_col_of[r]] = _ONE
    for r in range(nrows):
        if art_col_of[r] is not None:
            cost1 = [c - x for c, x in zip(cost1, tableau[r])]

    return _Template(
        rows=tableau,
        cost1=cost1,
        nrows=nrows,
        n_real=n_real,
        n_std=n_std,
        n_slack=n_slack,
        n_art=n_art,
        basis=basis,
        var_map=var_map,
    )


def _with_objective(template: _Template, objective) -> _Standardized:
    """Attach a cost row to a template; the rows themselves are shared
    (kernels copy them on construction and never mutate the input)."""
    std_obj = [_ZERO] * template.n_std
    offset = _ZERO
    for j, cj in enumerate(objective):
        kind = template.var_map[j]
        if kind[0] == "shift":
            std_obj[kind[1]] = cj
            offset += cj * kind[2]
        else:
            std_obj[kind[1]] = cj
            std_obj[kind[2]] = -cj
    cost2 = std_obj + [_ZERO] * (template.n_slack + template.n_art) + [_ZERO]
    return _Standardized(
        tableau=template.rows + [cost2, template.cost1],
        nrows=template.nrows,
        n_real=template.n_real,
        n_std=template.n_std,
        basis=template.basis,
        has_artificial=template.n_art > 0,
        var_map=template.var_map,
        offset=offset,
    )


def _standardize(lp: LinearProgram) -> _Standardized:
    template = _standardize_rows(
        len(lp.objective), lp.constraints, lp.lower, lp.upper
    )
    return _with_objective(template, lp.objective)


def _run(lane, std: _Standardized):
    tableau = lane.Tableau(std.tableau)
    m = std.nrows
    rhs_col = len(std.tableau[0]) - 1
    basis = list(std.basis)
    phase2_row, phase1_row = m, m + 1

    if std.has_artificial:
        while True:
            col = tableau.entering(phase1_row, std.n_real)
            if col < 0:
                break
            row = tableau.leaving(col, m, basis)
            if row < 0:  # phase-1 objective is bounded below by zero
                raise AssertionError("phase-1 column with no positive entry")
            tableau.pivot(row, col, m + 2)
            basis[row] = col
        if tableau.get(phase1_row, rhs_col) < 0:
            return INFEASIBLE, None, None
        # Degenerate artificials still basic at value zero: pivot them out
        # on any nonzero real column; a row with none is inert (its basic
        # artificial can never change value again).
        for r in range(m):
            if basis[r] >= std.n_real:
                col = tableau.first_nonzero(r, std.n_real)
                if col >= 0:
                    tableau.pivot(r, col, m + 2)
                    basis[r] = col

    while True:
        col = tableau.entering(phase2_row, std.n_real)
        if col < 0:
            break
        row = tableau.leaving(col, m, basis)
        if row < 0:
            return UNBOUNDED, None, None
        tableau.pivot(row, col, m + 1)
        basis[row] = col

    x_std = [_ZERO] * std.n_std
    for r in range(m):
        if basis[r] < std.n_std:
            x_std[basis[r]] = tableau.get(r, rhs_col)
    value = -tableau.get(phase2_row, rhs_col)
    return OPTIMAL, value, x_std


def _env_backend() -> str:
    return os.environ.get("PARETO_KIT_BACKEND", "auto")


_DEFAULT_BACKEND = _env_backend()


def active_backend() -> str:
    """Which kernel lane lp_solve uses by default: 'compiled' or 'pure'."""
    if _DEFAULT_BACKEND == "pure" or _compiled is None:
        return "pure"
    return "compiled"


def _lane(backend: str | None):
    choice = backend if backend is not None else _DEFAULT_BACKEND
    if choice in (None, "auto"):
        choice = "compiled" if _compiled is not None else "pure"
    if choice == "pure":
        return _simplex_py
    if choice == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available in this install")
        return _compiled
    raise ValueError(f"unknown backend {choice!r}")


def _check_outcome(lp: LinearProgram, outcome: LpOutcome) -> None:
    point = outcome.point
    value = sum((c * x for c, x in zip(lp.objective, point)), _ZERO)
    assert value == outcome.value, "objective value mismatch"
    for con in lp.constraints:
        lhs = sum((a * x for a, x in zip(con.coeffs, point)), _ZERO)
        if con.relation == LE:
            ok = lhs <= con.rhs
        elif con.relation == GE:
            ok = lhs >= con.rhs
        else:
            ok = lhs == con.rhs
        assert ok, "solver returned an infeasible point"
    n = len(lp.objective)
    lower = lp.lower if lp.lower is not None else (None,) * n
    upper = lp.upper if lp.upper is not None else (None,) * n
    for x, lo, hi in zip(point, lower, upper):
        assert lo is None or x >= lo, "lower bound violated"
        assert hi is None or x <= hi, "upper bound violated"


def _solve_standardized(lp: LinearProgram, std: _Standardized, lane) -> LpOutcome:
    if lane is _simplex_py:
        status, value_std, x_std = _run(_simplex_py, std)
    else:
        try:
            status, value_std, x_std = _run(lane, std)
        except OverflowError:
            status, value_std, x_std = _run(_simplex_py, std)
    if status != OPTIMAL:
        return LpOutcome(status)
    point = []
    for kind in std.var_map:
        if kind[0] == "shift":
            point.append(kind[2] + x_std[kind[1]])
        else:
            point.append(x_std[kind[1]] - x_std[kind[2]])
    outcome = LpOutcome(OPTIMAL, value_std + std.offset, tuple(point))
    _check_outcome(lp, outcome)
    return outcome


def lp_solve(lp: LinearProgram, backend: str | None = None) -> LpOutcome:
    """Solve exactly; deterministic including the returned point.

    Optimal outcomes are re-substituted into every constraint before being
    returned, so a reported point satisfies the program exactly.
    """
    return _solve_standardized(lp, _standardize(lp), _lane(backend))


def lp_solve_batch(
    objectives, rows, lower=None, upper=None, backend: str | None = None
) -> list[LpOutcome]:
    """Solve one program per objective over a shared constraint system.

    Produces exactly the same outcomes as calling lp_solve per objective;
    the constraint standardization is just done once.
    """
    lane = _lane(backend)
    costs = [tuple(as_fraction(c) for c in objective) for objective in objectives]
    if not costs:
        return []
    base = linprog(costs[0], rows, lower, upper)
    template = _standardize_rows(
        len(base.objective), base.constraints, base.lower, base.upper
    )
    outcomes = []
    for cost in costs:
        lp = LinearProgram(cost, base.constraints, base.lower, base.upper)
        outcomes.append(_solve_standardized(lp, _with_objective(template, cost), lane))
    return outcomes
