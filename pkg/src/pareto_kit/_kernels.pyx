# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact-rational kernels.

Hot loops of the package: the simplex tableau operations behind lp_solve
and the pairwise dominance scan.  Entries are numerator/denominator pairs
in signed 64-bit integers, with 128-bit intermediates; whenever a reduced
value no longer fits, the kernel raises OverflowError and the caller
reruns the computation on the pure-Python lane.  Pivot decisions (Bland's
rule, tie-breaks) are identical to the pure lane, so both produce the same
outcome whenever this one completes.
"""

from fractions import Fraction

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef extern from *:
    """
    typedef __int128 pk_i128;
    """
    ctypedef long long i128 "pk_i128"

cdef i64 I64_MAX = 9223372036854775807


cdef inline i128 _gcd(i128 a, i128 b) noexcept:
    cdef i128 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


cdef struct Rat:
    i64 num
    i64 den


cdef inline int _make(i128 num, i128 den, Rat* out) except -1:
    # den > 0 is an invariant kept by every caller
    cdef i128 g
    if num == 0:
        out.num = 0
        out.den = 1
        return 0
    g = _gcd(num, den)
    num = num / g
    den = den / g
    if num > <i128>I64_MAX or num < -(<i128>I64_MAX) - 1 or den > <i128>I64_MAX:
        raise OverflowError("rational value left the 64-bit range")
    out.num = <i64>num
    out.den = <i64>den
    return 0


cdef inline int _sub(Rat a, Rat b, Rat* out) except -1:
    return _make(
        <i128>a.num * b.den - <i128>b.num * a.den,
        <i128>a.den * b.den,
        out,
    )


cdef inline int _mul(Rat a, Rat b, Rat* out) except -1:
    return _make(<i128>a.num * b.num, <i128>a.den * b.den, out)


cdef inline int _div(Rat a, Rat b, Rat* out) except -1:
    # b != 0; keep the denominator positive
    cdef i128 num = <i128>a.num * b.den
    cdef i128 den = <i128>a.den * b.num
    if den < 0:
        num = -num
        den = -den
    return _make(num, den, out)


cdef inline int _cmp(Rat a, Rat b) noexcept:
    cdef i128 lhs = <i128>a.num * b.den
    cdef i128 rhs = <i128>b.num * a.den
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


cdef class Tableau:
    """Dense simplex tableau; same call surface as the pure-Python lane."""

    cdef Rat* cells
    cdef Py_ssize_t nrows
    cdef Py_ssize_t ncols

    def __cinit__(self, rows):
        self.cells = NULL
        self.nrows = len(rows)
        self.ncols = len(rows[0])
        self.cells = <Rat*>malloc(self.nrows * self.ncols * sizeof(Rat))
        if self.cells == NULL:
            raise MemoryError()
        cdef Py_ssize_t i, j
        cdef Rat* cell
        for i in range(self.nrows):
            row = rows[i]
            for j in range(self.ncols):
                value = row[j]
                cell = self.cells + i * self.ncols + j
                cell.num = value.numerator
                cell.den = value.denominator

    def __dealloc__(self):
        if self.cells != NULL:
            free(self.cells)

    cdef inline Rat* _at(self, Py_ssize_t r, Py_ssize_t c) noexcept:
        return self.cells + r * self.ncols + c

    def entering(self, Py_ssize_t cost_row, Py_ssize_t limit):
        cdef Py_ssize_t j
        cdef Rat* row = self.cells + cost_row * self.ncols
        for j in range(limit):
            if row[j].num < 0:
                return j
        return -1

    def leaving(self, Py_ssize_t col, Py_ssize_t nrows, list basis):
        cdef Py_ssize_t rhs = self.ncols - 1
        cdef Py_ssize_t best = -1
        cdef Rat best_ratio = Rat(0, 1)
        cdef i64 best_var = -1
        cdef i64 var
        cdef Rat ratio
        cdef Rat* a
        cdef Py_ssize_t r
        cdef int order
        for r in range(nrows):
            a = self._at(r, col)
            if a.num > 0:
                _div(self._at(r, rhs)[0], a[0], &ratio)
                var = basis[r]
                if best < 0:
                    best = r
                    best_ratio = ratio
                    best_var = var
                else:
                    order = _cmp(ratio, best_ratio)
                    if order < 0 or (order == 0 and var < best_var):
                        best = r
                        best_ratio = ratio
                        best_var = var
        return best

    def pivot(self, Py_ssize_t prow, Py_ssize_t pcol, Py_ssize_t nrows):
        cdef Py_ssize_t i, j
        cdef Rat pv = self._at(prow, pcol)[0]
        cdef Rat factor
        cdef Rat* row
        cdef Rat* pivot_row = self.cells + prow * self.ncols
        cdef Rat tmp
        for j in range(self.ncols):
            _div(pivot_row[j], pv, &tmp)
            pivot_row[j] = tmp
        for i in range(nrows):
            if i == prow:
                continue
            row = self.cells + i * self.ncols
            factor = row[pcol]
            if factor.num == 0:
                continue
            for j in range(self.ncols):
                if pivot_row[j].num != 0:
                    _mul(factor, pivot_row[j], &tmp)
                    _sub(row[j], tmp, &row[j])
        return None

    def first_nonzero(self, Py_ssize_t row, Py_ssize_t limit):
        cdef Py_ssize_t j
        cdef Rat* cells = self.cells + row * self.ncols
        for j in range(limit):
            if cells[j].num != 0:
                return j
        return -1

    def get(self, Py_ssize_t row, Py_ssize_t col):
        cdef Rat* cell = self._at(row, col)
        return Fraction(cell.num, cell.den)


def dominated_flags(list nums, list dens, bint strict):
    """Per-row flag: is some other row componentwise below it?

    Rows are expected to be pairwise distinct, so in the nonstrict case
    "below" is plain <= in every coordinate.
    """
    cdef Py_ssize_t n = len(nums)
    cdef Py_ssize_t p = len(nums[0]) if n else 0
    cdef i64* num
    cdef i64* den
    cdef Py_ssize_t i, j, k
    cdef bint beats
    cdef i128 lhs, rhs
    num = <i64*>malloc(n * p * sizeof(i64))
    den = <i64*>malloc(n * p * sizeof(i64))
    if num == NULL or den == NULL:
        if num != NULL:
            free(num)
        if den != NULL:
            free(den)
        raise MemoryError()
    try:
        for i in range(n):
            num_row = nums[i]
            den_row = dens[i]
            for k in range(p):
                num[i * p + k] = num_row[k]
                den[i * p + k] = den_row[k]
        flags = [False] * n
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                beats = True
                for k in range(p):
                    lhs = <i128>num[j * p + k] * den[i * p + k]
                    rhs = <i128>num[i * p + k] * den[j * p + k]
                    if (lhs >= rhs) if strict else (lhs > rhs):
                        beats = False
                        break
                if beats:
                    flags[i] = True
                    break
        return flags
    finally:
        free(num)
        free(den)
