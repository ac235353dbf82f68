"""Independent oracles and generators shared by the test suite.

Everything here is deliberately naive: the blade product reorders an
explicit symbol string and counts adjacent swaps, the rank oracle is a
plain fraction RREF, and the multivector product oracle is a double loop
over index tuples.  None of it shares code with the package internals.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from cliffidem.core import Multivector, Signature


def oracle_blade_product(a_indices, b_indices, p):
    """Multiply two blades given as tuples of 1-based generator indices.

    Sorts the concatenated factor string by adjacent transpositions
    (each swap flips the sign), then cancels equal adjacent factors
    against their metric square (+1 for index <= p, -1 above).
    Returns (sign, tuple_of_remaining_indices).
    """
    seq = list(a_indices) + list(b_indices)
    sign = 1
    # bubble sort, counting swaps; equal neighbours are never swapped
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
    # cancel adjacent equal pairs
    out = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i] == seq[i + 1]:
            if seq[i] > p:
                sign = -sign
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return sign, tuple(out)


def mask_to_indices(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def indices_to_mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def oracle_product(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product by direct double expansion over blade pairs."""
    sig = a.sig
    acc = {}
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            sign, out = oracle_blade_product(
                mask_to_indices(i), mask_to_indices(j), sig.p
            )
            k = indices_to_mask(out)
            acc[k] = acc.get(k, Fraction(0)) + sign * ca * cb
    coeffs = [acc.get(k, Fraction(0)) for k in range(sig.size)]
    return Multivector(sig, coeffs)


def oracle_rank(rows):
    """Rank of a matrix of Fractions/ints via plain RREF, no pivot tricks."""
    m = [[Fraction(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def random_fraction(rng: random.Random, num_bound=4, den_bound=3) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_multivector(sig: Signature, rng: random.Random, nnz=6) -> Multivector:
    """Sparse random multivector with small rational coefficients."""
    coeffs = [Fraction(0)] * sig.size
    for _ in range(min(nnz, sig.size)):
        coeffs[rng.randrange(sig.size)] = random_fraction(rng)
    return Multivector(sig, coeffs)


def all_signatures(max_dim):
    for d in range(max_dim + 1):
        for p in range(d, -1, -1):
            yield Signature(p, d - p)


def frac_grid(*values):
    """Cartesian product helper for small exact parameter grids."""
    return itertools.product(*[[Fraction(v) for v in vs] for vs in values])
