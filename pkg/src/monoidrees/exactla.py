"""Dense exact linear algebra over QQ and GF(p).

Over QQ rows are scaled to integers and reduced with fraction-free
(Bareiss-style) Gauss-Jordan elimination: every intermediate entry is a
minor of the input, so each update divides exactly by the previous pivot.
Over GF(p) ordinary Gauss-Jordan is used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .ring import QQ


class ExactMatrix:
    """Immutable dense matrix; ``entries`` is row-major."""

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows, cols, entries, field=QQ):
        entries = [field.convert(x) for x in entries]
        if len(entries) != rows * cols:
            raise ValueError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows, field=QQ, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r], field)

    @classmethod
    def identity(cls, k, field=QQ):
        return cls(k, k, [int(i == j) for i in range(k) for j in range(k)], field)

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls(r, c, [0] * (r * c), field)

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and (self.rows, self.cols, self.field) == (other.rows, other.cols, other.field)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.field, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.to_rows()!r}, field={self.field!r})"

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        red = self.field.reduce
        return [red(sum(a * b for a, b in zip(self.row(i), v))) for i in range(self.rows)]


def _integer_rows(rows):
    out = []
    for r in rows:
        den = reduce(math.lcm, (Fraction(x).denominator for x in r), 1)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _rref_bareiss(rows, ncols):
    """Fraction-free Gauss-Jordan on integer rows.

    Returns (echelon rows, pivot columns, common pivot value).  Pivot rows all
    carry the same diagonal value ``d``; dividing by ``d`` yields the RREF.
    """
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        pv = piv_row[c]
        for i in range(m):
            if i == r:
                continue
            f = a[i][c]
            a[i] = [(pv * x - f * y) // prev for x, y in zip(a[i], piv_row)]
        prev = pv
        pivots.append(c)
        r += 1
    # each later step rescales earlier pivot rows, so all pivots equal ``prev``
    return a, pivots, prev


def _rref_modp(rows, ncols, p):
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        pr = [x * inv % p for x in a[r]]
        a[r] = pr
        for i in range(m):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_rows(rows, ncols, field):
    if field == QQ:
        a, pivots, d = _rref_bareiss(_integer_rows(rows), ncols)
        out = []
        for i, row in enumerate(a):
            if i < len(pivots):
                out.append([QQ.reduce(Fraction(x, d)) for x in row])
            else:
                out.append([0] * ncols)
        return out, pivots
    a, pivots = _rref_modp(rows, ncols, field.p)
    return a, pivots


def rref(m):
    """Reduced row echelon form and pivot column list."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols, m.field)
    return ExactMatrix.from_rows(rows, m.field, m.cols), pivots


def rank(m):
    return rank_of_rows(m.to_rows(), m.cols, m.field)


def rref_pivots(rows, ncols, field):
    return _rref_rows(rows, ncols, field)[1]


def _echelon_rank_int(a, ncols):
    # forward Bareiss elimination only
    m = len(a)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        pv = piv_row[c]
        for i in range(r + 1, m):
            f = a[i][c]
            a[i] = [(pv * x - f * y) // prev for x, y in zip(a[i], piv_row)]
        prev = pv
        r += 1
    return r


def _echelon_rank_modp(a, ncols, p):
    m = len(a)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        pr = [x * inv % p for x in a[r]]
        for i in range(r + 1, m):
            f = a[i][c]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        r += 1
    return r


def rank_of_rows(rows, ncols, field):
    if not rows:
        return 0
    if field == QQ:
        return _echelon_rank_int(_integer_rows(rows), ncols)
    p = field.p
    return _echelon_rank_modp([[x % p for x in r] for r in rows], ncols, p)


def kernel_basis(m):
    """Right null space basis.

    Free columns are taken in ascending order; each basis vector has a 1 in
    its free column, 0 in the other free columns.
    """
    return kernel_of_rows(m.to_rows(), m.cols, m.field)


def kernel_of_rows(rows, ncols, field):
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, pivots = _rref_rows(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            x = red[r][free]
            if x:
                v[pc] = field.reduce(-x)
        basis.append(v)
    return basis


def reduce_against(rref_rows, pivots, v, field):
    """Reduce v modulo the row space of an RREF; the result has zeros at pivots."""
    v = list(v)
    for r, pc in enumerate(pivots):
        x = v[pc]
        if x:
            row = rref_rows[r]
            v = [field.reduce(a - x * b) for a, b in zip(v, row)]
    return v
