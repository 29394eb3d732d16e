"""Pure-Python simplex tableau kernel over exact fractions.

This is the reference lane.  The optional compiled extension
(``pareto_kit._kernels``) implements the same four operations with the same
pivot decisions; the linear-programming driver treats the two lanes as
interchangeable.  Conventions shared by both lanes:

* the tableau is a dense (rows x cols) matrix of rationals whose last
  column is the right-hand side,
* cost rows hold reduced costs, with the negated objective value in the
  right-hand-side column, and are updated by the same elimination step as
  constraint rows,
* entering column: smallest index with a negative reduced cost (Bland),
* leaving row: smallest ratio rhs/pivot over positive pivot entries, ties
  broken by the smallest basic variable index (Bland).
"""

from __future__ import annotations

from fractions import Fraction


class Tableau:
    __slots__ = ("rows", "ncols")

    def __init__(self, rows):
        self.rows = [list(row) for row in rows]
        self.ncols = len(self.rows[0])

    def entering(self, cost_row: int, limit: int) -> int:
        row = self.rows[cost_row]
        for j in range(limit):
            if row[j] < 0:
                return j
        return -1

    def leaving(self, col: int, nrows: int, basis) -> int:
        rhs = self.ncols - 1
        best = -1
        best_ratio = None
        best_var = -1
        for r in range(nrows):
            a = self.rows[r][col]
            if a > 0:
                ratio = self.rows[r][rhs] / a
                if (
                    best < 0
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < best_var)
                ):
                    best, best_ratio, best_var = r, ratio, basis[r]
        return best

    def pivot(self, prow: int, pcol: int, nrows: int) -> None:
        rows = self.rows
        pivot_value = rows[prow][pcol]
        inv = 1 / pivot_value
        rows[prow] = pivot_row = [x * inv for x in rows[prow]]
        for i in range(nrows):
            if i == prow:
                continue
            factor = rows[i][pcol]
            if factor:
                rows[i] = [x - factor * y for x, y in zip(rows[i], pivot_row)]

    def first_nonzero(self, row: int, limit: int) -> int:
        values = self.rows[row]
        for j in range(limit):
            if values[j] != 0:
                return j
        return -1

    def get(self, row: int, col: int) -> Fraction:
        return self.rows[row][col]
