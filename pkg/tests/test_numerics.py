import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pareto_kit.errors import DimensionMismatch, MalformedNumber, ZeroDenominator
from pareto_kit.numerics import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    OPTIMAL,
    UNBOUNDED,
    linprog,
    lp_solve,
    rational_format,
    rational_parse,
)

from oracles import oracle_lp_minimum


def test_parse_decimal_is_exact():
    assert rational_parse("0.5") == Fraction(1, 2)
    assert rational_parse("0.1") == Fraction(1, 10)


def test_parse_integer():
    assert rational_parse("-3") == Fraction(-3)


def test_parse_reduces_to_lowest_terms():
    value = rational_parse("2/6")
    assert value == Fraction(1, 3)
    assert value.numerator == 1 and value.denominator == 3


def test_parse_negative_denominator_normalizes():
    assert rational_parse("1/-2") == Fraction(-1, 2)


def test_parse_errors():
    with pytest.raises(MalformedNumber):
        rational_parse("abc")
    with pytest.raises(MalformedNumber):
        rational_parse("1/2/3")
    with pytest.raises(ZeroDenominator):
        rational_parse("1/0")
    with pytest.raises(MalformedNumber):
        rational_parse(1.5)


@given(st.integers(-10**12, 10**12), st.integers(1, 10**9))
@settings(max_examples=200, deadline=None)
def test_parse_format_round_trip(num, den):
    value = Fraction(num, den)
    assert rational_parse(rational_format(value)) == value


def test_lp_single_constraint_minimum():
    out = lp_solve(linprog([1], [([1], GE, 3)]))
    assert out.status == OPTIMAL
    assert out.value == 3
    assert out.point == (Fraction(3),)


def test_lp_contradictory_bounds_infeasible():
    out = lp_solve(linprog([1], [([1], LE, 0), ([1], GE, 1)]))
    assert out.status == INFEASIBLE


def test_lp_unbounded_ray():
    out = lp_solve(linprog([-1], [([1], GE, 0)]))
    assert out.status == UNBOUNDED


def test_lp_equality_and_bounds():
    out = lp_solve(
        linprog([1, 1], [([1, 1], EQ, 2)], lower=[0, 0], upper=[5, 5])
    )
    assert out.status == OPTIMAL
    assert out.value == 2


def test_lp_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        linprog([1, 2], [([1], LE, 0)])


def test_lp_deterministic():
    lp = linprog([1, -2], [([1, 1], LE, 4), ([1, -1], GE, -2)], lower=[0, 0])
    assert lp_solve(lp) == lp_solve(lp)


def _random_boxed_lp(rng):
    n = rng.randint(1, 3)
    m = rng.randint(1, 6)
    rows = []
    for _ in range(m):
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        rows.append((coeffs, LE, Fraction(rng.randint(-5, 5))))
    box = Fraction(rng.randint(1, 5))
    for j in range(n):
        unit = [Fraction(0)] * n
        unit[j] = Fraction(1)
        rows.append((unit, LE, box))
        rows.append(([-x for x in unit], LE, box))
    objective = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    return objective, rows


def test_lp_matches_vertex_enumeration_oracle():
    rng = random.Random(7)
    solved = 0
    for _ in range(150):
        objective, rows = _random_boxed_lp(rng)
        outcome = lp_solve(linprog(objective, rows))
        expected = oracle_lp_minimum(
            objective, [r[0] for r in rows], [r[2] for r in rows]
        )
        if expected is None:
            assert outcome.status == INFEASIBLE
        else:
            assert outcome.status == OPTIMAL
            assert outcome.value == expected
            solved += 1
    assert solved > 50


def test_batch_solve_matches_individual_solves():
    from pareto_kit.numerics.linprog import lp_solve_batch

    rng = random.Random(19)
    for _ in range(30):
        _, rows = _random_boxed_lp(rng)
        n = len(rows[0][0])
        objectives = [
            [Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(6)
        ]
        batch = lp_solve_batch(objectives, rows)
        singles = [lp_solve(linprog(obj, rows)) for obj in objectives]
        assert batch == singles


def test_optimal_point_satisfies_constraints_exactly():
    rng = random.Random(11)
    for _ in range(80):
        objective, rows = _random_boxed_lp(rng)
        outcome = lp_solve(linprog(objective, rows))
        if outcome.status != OPTIMAL:
            continue
        for coeffs, rel, rhs in rows:
            lhs = sum(c * x for c, x in zip(coeffs, outcome.point))
            assert lhs <= rhs
        assert sum(c * x for c, x in zip(objective, outcome.point)) == outcome.value
