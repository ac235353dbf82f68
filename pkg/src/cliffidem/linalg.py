"""Exact linear algebra over the rationals.

Rank goes through the integer fraction-free kernel (rows are cleared of
denominators first, which changes no ranks); solving and nullspaces use
plain Fraction elimination, which is fast enough at this package's
matrix sizes (at most 256 x 256).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

from . import _kernels
from .errors import SingularMatrixError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _integer_rows(rows) -> List[List[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        fracs = [c if isinstance(c, Fraction) else Fraction(c) for c in row]
        scale = lcm(*(c.denominator for c in fracs)) if fracs else 1
        out.append([int(c * scale) for c in fracs])
    return out


def rank(rows) -> int:
    """Rank of a matrix of rationals (any iterable of rows)."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    return _kernels.int_rank(m)


def nullity(rows) -> int:
    """Kernel dimension: number of columns minus the rank."""
    m = list(rows)
    if not m:
        return 0
    return len(m[0]) - rank(m)


def _pivot_key(value: Fraction):
    """Prefer pivots with small numerator/denominator to limit growth."""
    return value.numerator.bit_length() + value.denominator.bit_length()


def solve(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve the square system a @ x = b exactly.

    Raises SingularMatrixError when the matrix has no inverse.
    """
    n = len(a)
    m = [
        [Fraction(v) for v in row] + [Fraction(b[i])]
        for i, row in enumerate(a)
    ]
    if any(len(row) != n + 1 for row in m):
        raise ValueError("solve needs a square matrix and a matching vector")
    for col in range(n):
        piv = -1
        best = None
        for r in range(col, n):
            v = m[r][col]
            if v:
                key = _pivot_key(v)
                if piv < 0 or key < best:
                    piv, best = r, key
        if piv < 0:
            raise SingularMatrixError(f"matrix is singular at column {col}")
        m[col], m[piv] = m[piv], m[col]
        inv = _ONE / m[col][col]
        m[col] = [v * inv for v in m[col]]
        prow = m[col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], prow)]
    return [m[i][n] for i in range(n)]


def nullspace(rows) -> List[List[Fraction]]:
    """A basis of the right kernel, from the reduced row-echelon form."""
    m = [[Fraction(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = -1
        best = None
        for r in range(row, nrows):
            v = m[r][col]
            if v:
                key = _pivot_key(v)
                if piv < 0 or key < best:
                    piv, best = r, key
        if piv < 0:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = _ONE / m[row][col]
        m[row] = [v * inv for v in m[row]]
        prow = m[row]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], prow)]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [_ZERO] * ncols
        v[free] = _ONE
        for r, pcol in enumerate(pivots):
            v[pcol] = -m[r][free]
        basis.append(v)
    return basis
