"""Pure-Python arithmetic kernels.

These are the hot loops of the package: blade-product signs, the dense
geometric product, and integer matrix rank by fraction-free elimination.
A compiled twin (``_fast``) implements the same call contract; the
package selects one at import time in ``cliffidem._kernels``.
"""

from array import array
from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)


def blade_sign(a: int, b: int, p: int, q: int) -> int:
    """Sign of the product of basis blades with bitmasks ``a`` and ``b``.

    Counts the transpositions needed to interleave the two ascending
    factor strings, then multiplies in the metric square of every common
    generator (-1 for generators above ``p``).
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    swaps += ((a & b) >> p).bit_count()
    return -1 if swaps & 1 else 1


def sign_table(p: int, q: int) -> array:
    """All blade-product signs for C^{p,q}, indexed by (a << nbits) | b."""
    n = 1 << (p + q)
    table = array("b", bytes(n * n))
    for a in range(n):
        row = a << (p + q)
        for b in range(n):
            table[row | b] = blade_sign(a, b, p, q)
    return table


def gp_dense(a, b, table, nbits: int):
    """Geometric product of dense coefficient tuples under ``table``.

    ``a`` and ``b`` are sequences of 2**nbits exact rationals; the result
    is a tuple of the same length.  Zero coefficients are skipped, so
    sparse inputs cost roughly nnz(a) * nnz(b) multiplications.
    """
    n = 1 << nbits
    out = [_ZERO] * n
    for i in range(n):
        ca = a[i]
        if not ca:
            continue
        row = i << nbits
        for j in range(n):
            cb = b[j]
            if not cb:
                continue
            if table[row | j] > 0:
                out[i ^ j] += ca * cb
            else:
                out[i ^ j] -= ca * cb
    return tuple(out)


def int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Pivots are chosen with the smallest absolute value in the column and
    each updated row is divided by its content, both to slow coefficient
    growth.  The input is copied, never modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = -1
        best = 0
        for r in range(row, nrows):
            v = m[r][col]
            if v:
                v = -v if v < 0 else v
                if piv < 0 or v < best:
                    piv, best = r, v
                    if v == 1:
                        break
        if piv < 0:
            continue
        m[row], m[piv] = m[piv], m[row]
        prow = m[row]
        pv = prow[col]
        for r in range(row + 1, nrows):
            mr = m[r]
            v = mr[col]
            if not v:
                continue
            g = gcd(pv, v)
            fa = pv // g
            fb = v // g
            mr[col] = 0
            content = 0
            for c in range(col + 1, ncols):
                w = mr[c] * fa - prow[c] * fb
                mr[c] = w
                if content != 1:
                    content = gcd(content, w)
            if content > 1:
                for c in range(col + 1, ncols):
                    mr[c] //= content
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
