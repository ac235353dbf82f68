"""Canonical idempotents and seeded orbit sampling.

A maximal set of k commuting, multiplicatively independent blades that
square to +e^0 generates a family of 2^k nonzero idempotents
f_sigma = prod_i (e^0 + sigma_i b_i)/2, sigma in {+1,-1}^k.  The family
members annihilate each other, sum to e^0, and are primitive (rank 1,
or (1,0)/(0,1) across a direct sum), so summing members realizes every
rank class.  Conjugating such a canonical idempotent by a random
invertible element then walks its orbit without changing the class.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import linalg
from ._kernels import blade_sign
from .core import Blade, Multivector, Signature, geometric_product
from .engine import left_multiplication_matrix, rank_class
from .errors import FamilySearchError, RetryBudgetError, SingularMatrixError
from .structure import RankClass, classify_signature, validate_rank

_HALF = Fraction(1, 2)

DEFAULT_MAX_TRIES = 64

# numerators and denominators for random coefficient draws; kept small so
# that exact conjugation does not blow up coefficient sizes
_NUMERATORS = (-2, -1, 1, 2)
_DENOMINATORS = (1, 2)


@dataclass(frozen=True)
class PrimitiveFamily:
    """The blades and the 2^k idempotents they generate.

    ``members[s]`` takes sigma_i = -1 exactly where bit i of s is set,
    so ``members[0]`` is the all-plus idempotent.  ``member_ranks``
    holds the verified rank class of each member.
    """

    sig: Signature
    blades: Tuple[Blade, ...]
    members: Tuple[Multivector, ...]
    member_ranks: Tuple[RankClass, ...]


def _commute(a: int, b: int, p: int, q: int) -> bool:
    return blade_sign(a, b, p, q) == blade_sign(b, a, p, q)


def _find_blades(sig: Signature, k: int) -> List[int]:
    """Lexicographically first set of k independent commuting blades
    squaring to +e^0, by depth-first search over ascending masks."""
    candidates = [
        m for m in range(1, sig.size) if blade_sign(m, m, sig.p, sig.q) == 1
    ]
    chosen: List[int] = []
    span = {0}

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if m in span:
                continue
            if any(not _commute(m, b, sig.p, sig.q) for b in chosen):
                continue
            chosen.append(m)
            added = {s ^ m for s in span}
            span.update(added)
            if extend(idx + 1):
                return True
            chosen.pop()
            span.difference_update(added)
        return False

    if not extend(0):
        raise FamilySearchError(
            f"no family of {k} commuting +1-squaring blades found in {sig}"
        )
    return chosen


@functools.lru_cache(maxsize=None)
def primitive_family(sig: Signature) -> PrimitiveFamily:
    """The canonical primitive-idempotent family of C^{p,q}.

    k is forced by the classification: 2^k must equal N for one matrix
    ring and 2N for a direct sum.  The returned family is validated
    (mutual annihilation, partition of unity, per-member rank class)
    before being cached.
    """
    cls = classify_signature(sig)
    k = cls.N.bit_length() - 1 + (0 if cls.simple else 1)
    masks = _find_blades(sig, k)
    blades = tuple(Blade(m) for m in masks)
    one = Multivector.one(sig)
    factors_plus = [
        Multivector.from_terms(sig, {(): _HALF, b.indices: _HALF}) for b in blades
    ]
    factors_minus = [
        Multivector.from_terms(sig, {(): _HALF, b.indices: -_HALF}) for b in blades
    ]
    members = []
    for s in range(1 << k):
        f = one
        for i in range(k):
            factor = factors_minus[i] if s >> i & 1 else factors_plus[i]
            f = geometric_product(f, factor)
        members.append(f)
    zero = Multivector.zero(sig)
    total = zero
    for i, fi in enumerate(members):
        total = total + fi
        for j, fj in enumerate(members):
            expected = fi if i == j else zero
            if geometric_product(fi, fj) != expected:
                raise FamilySearchError(f"family of {sig} is not orthogonal")
    if total != one:
        raise FamilySearchError(f"family of {sig} does not sum to the unit")
    ranks = tuple(rank_class(f) for f in members)
    allowed = {RankClass(1)} if cls.simple else {RankClass(1, 0), RankClass(0, 1)}
    if not set(ranks) <= allowed:
        raise FamilySearchError(f"family of {sig} has non-primitive members")
    return PrimitiveFamily(
        sig=sig, blades=blades, members=tuple(members), member_ranks=ranks
    )


def canonical_idempotent(sig: Signature, rank: RankClass) -> Multivector:
    """The standard representative of a rank class: a sum of family members."""
    cls = classify_signature(sig)
    validate_rank(cls, rank)
    fam = primitive_family(sig)
    picked: List[Multivector] = []
    if cls.simple:
        picked = list(fam.members[: rank.n])
    else:
        need = {RankClass(1, 0): rank.n, RankClass(0, 1): rank.m}
        for member, label in zip(fam.members, fam.member_ranks):
            if need[label] > 0:
                picked.append(member)
                need[label] -= 1
    total = Multivector.zero(sig)
    for f in picked:
        total = total + f
    return total


def _draw(sig: Signature, rng: random.Random) -> Multivector:
    coeffs = []
    for _ in range(sig.size):
        if rng.randrange(2):
            coeffs.append(Fraction(0))
        else:
            coeffs.append(
                Fraction(
                    _NUMERATORS[rng.randrange(len(_NUMERATORS))],
                    _DENOMINATORS[rng.randrange(len(_DENOMINATORS))],
                )
            )
    return Multivector(sig, coeffs)


def _invert(s: Multivector):
    """Two-sided inverse of s, or None when s is singular."""
    sig = s.sig
    rhs = [Fraction(1)] + [Fraction(0)] * (sig.size - 1)
    try:
        coeffs = linalg.solve(left_multiplication_matrix(s), rhs)
    except SingularMatrixError:
        return None
    inv = Multivector(sig, coeffs)
    one = Multivector.one(sig)
    # solving the left-regular system gives s*inv = e0; in a
    # finite-dimensional unital algebra that forces inv*s = e0 too,
    # but it is cheap to insist
    if geometric_product(inv, s) != one:
        return None
    return inv


def _sample_invertible_pair(
    sig: Signature, seed: int, max_tries: int
) -> Tuple[Multivector, Multivector]:
    rng = random.Random(seed)
    for _ in range(max_tries):
        s = _draw(sig, rng)
        inv = _invert(s)
        if inv is not None:
            return s, inv
    raise RetryBudgetError(
        f"no invertible element of {sig} in {max_tries} draws (seed {seed})"
    )


def sample_invertible(
    sig: Signature, seed: int, max_tries: int = DEFAULT_MAX_TRIES
) -> Multivector:
    """Deterministic-in-seed random element with an exact two-sided inverse."""
    return _sample_invertible_pair(sig, seed, max_tries)[0]


def sample_idempotent(
    sig: Signature,
    rank: RankClass,
    seed: int,
    max_tries: int = DEFAULT_MAX_TRIES,
) -> Multivector:
    """A random point S Pi S^{-1} of the chosen idempotent orbit."""
    pi = canonical_idempotent(sig, rank)
    s, s_inv = _sample_invertible_pair(sig, seed, max_tries)
    return geometric_product(geometric_product(s, pi), s_inv)
