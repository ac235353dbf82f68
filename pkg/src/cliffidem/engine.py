"""Idempotent classification and tangent-space dimensions.

Everything here is intrinsic to the algebra: the rank label of an
idempotent comes from scalar parts (the trace of the matrix image in
disguise), the direct-sum split from the central pseudoscalar
projectors, and the variety dimension from the exact nullity of the
linearized idempotency map X -> AX + XA - X.  No matrix-ring
isomorphism is ever constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import linalg
from .core import (
    Multivector,
    Signature,
    _sign_table,
    geometric_product,
    pseudoscalar,
    scalar_part,
)
from .errors import NotIdempotentError, RankComputationError, SimpleAlgebraError
from .structure import AlgebraClass, RankClass, classify_signature, idem_dim_formula

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def is_idempotent(a: Multivector) -> bool:
    """Exact test of A*A = A."""
    return geometric_product(a, a) == a


def left_multiplication_matrix(a: Multivector) -> List[List[Fraction]]:
    """The operator X -> A*X on the algebra, as a size x size matrix.

    Column j holds the coefficients of A * e_{blade j}; built straight
    from the sign table, since blade j sends basis index i to i XOR j.
    """
    sig = a.sig
    n = sig.size
    nbits = sig.dim
    table = _sign_table(sig.p, sig.q)
    rows = [[_ZERO] * n for _ in range(n)]
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        base = i << nbits
        for j in range(n):
            rows[i ^ j][j] = c if table[base | j] > 0 else -c
    return rows


def _right_multiplication_matrix(a: Multivector) -> List[List[Fraction]]:
    """The operator X -> X*A as a matrix (column j is e_{blade j} * A)."""
    sig = a.sig
    n = sig.size
    nbits = sig.dim
    table = _sign_table(sig.p, sig.q)
    rows = [[_ZERO] * n for _ in range(n)]
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        for j in range(n):
            rows[i ^ j][j] = c if table[(j << nbits) | i] > 0 else -c
    return rows


def tangent_map_matrix(a: Multivector) -> List[List[Fraction]]:
    """Matrix of T(X) = A*X + X*A - X, the idempotency linearization."""
    left = left_multiplication_matrix(a)
    right = _right_multiplication_matrix(a)
    n = a.sig.size
    for i in range(n):
        li = left[i]
        ri = right[i]
        for j in range(n):
            li[j] += ri[j]
        li[i] -= 1
    return left


def _rank_from_scalar(value: Fraction, cls: AlgebraClass, what: str) -> int:
    if value.denominator != 1:
        raise RankComputationError(
            f"{what} = {value} is not an integer; "
            "this cannot happen for a true idempotent"
        )
    n = int(value)
    if not 0 <= n <= cls.N:
        raise RankComputationError(
            f"{what} = {n} falls outside 0..{cls.N}; "
            "this cannot happen for a true idempotent"
        )
    return n


def rank_class(a: Multivector) -> RankClass:
    """Orbit label of an idempotent: n = N<A>_0, split by the center.

    In a simple algebra the scalar part of an idempotent is n/N.  When
    the algebra is a direct sum, the central pseudoscalar omega takes
    the values +1/-1 on the two blocks, so <A>_0 and <A omega>_0
    together recover the pair (n, m).
    """
    if not is_idempotent(a):
        raise NotIdempotentError(f"not an idempotent: {a!r}")
    cls = classify_signature(a.sig)
    s = scalar_part(a)
    if cls.simple:
        return RankClass(_rank_from_scalar(cls.N * s, cls, "N<A>"))
    omega = pseudoscalar(a.sig).element
    t = scalar_part(geometric_product(a, omega))
    n = _rank_from_scalar(cls.N * (s + t), cls, "N(<A> + <A omega>)")
    m = _rank_from_scalar(cls.N * (s - t), cls, "N(<A> - <A omega>)")
    return RankClass(n, m)


def central_split(a: Multivector) -> Tuple[Multivector, Multivector]:
    """(A*(e0+omega)/2, A*(e0-omega)/2) in a direct-sum algebra.

    The two summands live in the complementary central ideals and add
    back to A.  Raises SimpleAlgebraError when the center is trivial
    ((p-q) mod 8 not in {1, 5}).
    """
    info = pseudoscalar(a.sig)
    if classify_signature(a.sig).simple:
        raise SimpleAlgebraError(
            f"{a.sig} is a single matrix ring; there is nothing to split"
        )
    assert info.central and info.square_sign == 1
    half_omega = info.element * _HALF
    half_one = Multivector.one(a.sig) * _HALF
    plus = geometric_product(a, half_one + half_omega)
    minus = geometric_product(a, half_one - half_omega)
    return plus, minus


@dataclass(frozen=True)
class TangentReport:
    """Computed variety dimension at an idempotent versus the formula."""

    sig: Signature
    rank: RankClass
    nullity: int
    formula_value: int

    @property
    def agrees(self) -> bool:
        return self.nullity == self.formula_value

    def to_json_dict(self) -> dict:
        return {
            "p": self.sig.p,
            "q": self.sig.q,
            "rank": self.rank.to_json(),
            "nullity": self.nullity,
            "formula": self.formula_value,
            "agrees": self.agrees,
        }


def tangent_dimension(a: Multivector) -> TangentReport:
    """Exact dimension of the idempotent variety at A, with the formula.

    The kernel of T(X) = AX + XA - X consists of the off-diagonal
    Peirce blocks of the matrix image, so its nullity must equal the
    orbit dimension 2*d*(n(N-n) [+ m(N-m)]); ``agrees`` records whether
    it does.
    """
    label = rank_class(a)  # validates idempotency
    cls = classify_signature(a.sig)
    nullity = linalg.nullity(tangent_map_matrix(a))
    return TangentReport(
        sig=a.sig,
        rank=label,
        nullity=nullity,
        formula_value=idem_dim_formula(cls, label),
    )
