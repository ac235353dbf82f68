# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels; the contract twin of ``_pure``.

The loop bookkeeping (indices, table lookups, pivot search) runs at C
speed; coefficient arithmetic stays on exact Python objects (Fraction,
arbitrary-size int), so results are bit-identical to the pure backend.
"""

import array as _array_mod

from cpython cimport array
from math import gcd as _gcd

_ZERO = __import__("fractions").Fraction(0)


cdef int _popcount(unsigned long long x) noexcept:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef int _blade_sign_c(unsigned long long a, unsigned long long b,
                       int p) noexcept:
    cdef int swaps = 0
    cdef unsigned long long x = a >> 1
    while x:
        swaps += _popcount(x & b)
        x >>= 1
    swaps += _popcount((a & b) >> p)
    return -1 if swaps & 1 else 1


def blade_sign(a, b, p, q):
    """Sign of the product of basis blades with bitmasks ``a`` and ``b``."""
    return _blade_sign_c(a, b, p)


def sign_table(p, q):
    """All blade-product signs for C^{p,q}, indexed by (a << nbits) | b."""
    cdef int nbits = p + q
    cdef Py_ssize_t n = 1 << nbits
    cdef int cp = p
    out = _array_mod.array("b", bytes(n * n))
    cdef signed char[::1] view = out
    cdef Py_ssize_t a, b
    for a in range(n):
        for b in range(n):
            view[(a << nbits) | b] = _blade_sign_c(a, b, cp)
    return out


def gp_dense(a, b, table, nbits):
    """Geometric product of dense coefficient tuples under ``table``."""
    cdef Py_ssize_t n = 1 << nbits
    cdef int shift = nbits
    cdef const signed char[::1] tbl = table
    cdef list out = [_ZERO] * n
    cdef Py_ssize_t i, j, row, k
    for i in range(n):
        ca = a[i]
        if not ca:
            continue
        row = i << shift
        for j in range(n):
            cb = b[j]
            if not cb:
                continue
            k = i ^ j
            if tbl[row | j] > 0:
                out[k] = out[k] + ca * cb
            else:
                out[k] = out[k] - ca * cb
    return tuple(out)


def int_rank(rows):
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    cdef list m = [list(entries) for entries in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(<list>m[0]) if nrows else 0
    cdef Py_ssize_t rank = 0, row = 0
    cdef Py_ssize_t col, r, c, piv
    cdef list prow, mr
    for col in range(ncols):
        piv = -1
        best = None
        for r in range(row, nrows):
            v = (<list>m[r])[col]
            if v:
                v = -v if v < 0 else v
                if piv < 0 or v < best:
                    piv = r
                    best = v
                    if v == 1:
                        break
        if piv < 0:
            continue
        m[row], m[piv] = m[piv], m[row]
        prow = <list>m[row]
        pv = prow[col]
        for r in range(row + 1, nrows):
            mr = <list>m[r]
            v = mr[col]
            if not v:
                continue
            g = _gcd(pv, v)
            fa = pv // g
            fb = v // g
            mr[col] = 0
            content = 0
            for c in range(col + 1, ncols):
                w = mr[c] * fa - prow[c] * fb
                mr[c] = w
                if content != 1:
                    content = _gcd(content, w)
            if content > 1:
                for c in range(col + 1, ncols):
                    mr[c] = mr[c] // content
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
