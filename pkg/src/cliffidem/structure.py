"""The mod-8 classification of C^{p,q} and the orbit-dimension formula.

Every real Clifford algebra is a full matrix ring M(N,K) over K = R, C
or H, or a direct sum of two equal ones; which case occurs depends only
on (p - q) mod 8, and N on p + q.  Idempotents of M(N,K) fall into
conjugation orbits labelled by the matrix rank n (a pair (n, m) in the
direct-sum case), and the orbit of rank n is a manifold of real
dimension d*2*n(N-n), where d = dim_R K.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional

from .core import Signature
from .errors import RankRangeError


class Ring(enum.Enum):
    """The three real division rings appearing in the classification."""

    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"

    @property
    def real_dim(self) -> int:
        """Dimension over R: 1, 2 or 4."""
        return _REAL_DIM[self]


_REAL_DIM = {Ring.REAL: 1, Ring.COMPLEX: 2, Ring.QUATERNION: 4}


@dataclass(frozen=True)
class AlgebraClass:
    """Matrix-ring shape of an algebra: M(N,ring), doubled when not simple."""

    ring: Ring
    N: int
    simple: bool

    @property
    def label(self) -> str:
        block = f"M({self.N},{self.ring.value})"
        return block if self.simple else f"{block}+{block}"


@dataclass(frozen=True)
class RankClass:
    """Orbit label of an idempotent: rank n, or the pair (n, m) when the
    algebra splits into two matrix-ring summands."""

    n: int
    m: Optional[int] = None

    @property
    def semisimple(self) -> bool:
        return self.m is not None

    def __str__(self) -> str:
        return str(self.n) if self.m is None else f"({self.n},{self.m})"

    @classmethod
    def parse(cls, text: str) -> "RankClass":
        """Parse 'n' or 'n,m' (as accepted by the command line)."""
        parts = text.strip().strip("()").split(",")
        if len(parts) not in (1, 2) or not all(
            part.strip().isdigit() for part in parts
        ):
            raise ValueError(f"rank must look like 'n' or 'n,m', got {text!r}")
        numbers = [int(part) for part in parts]
        return cls(numbers[0]) if len(numbers) == 1 else cls(numbers[0], numbers[1])

    def to_json(self):
        return self.n if self.m is None else [self.n, self.m]


def classify_signature(sig: Signature) -> AlgebraClass:
    """Which matrix ring C^{p,q} is, from (p-q) mod 8 and p+q."""
    residue = (sig.p - sig.q) % 8
    d = sig.dim
    if residue in (3, 7):
        return AlgebraClass(Ring.COMPLEX, 1 << ((d - 1) // 2), True)
    if residue in (0, 2):
        return AlgebraClass(Ring.REAL, 1 << (d // 2), True)
    if residue in (4, 6):
        return AlgebraClass(Ring.QUATERNION, 1 << ((d - 2) // 2), True)
    if residue == 1:
        return AlgebraClass(Ring.REAL, 1 << ((d - 1) // 2), False)
    # residue == 5
    return AlgebraClass(Ring.QUATERNION, 1 << ((d - 3) // 2), False)


def validate_rank(cls: AlgebraClass, rank: RankClass) -> None:
    """Raise RankRangeError unless ``rank`` fits ``cls``."""
    if rank.semisimple == cls.simple:
        want = "n,m" if not cls.simple else "a single integer"
        raise RankRangeError(f"{cls.label} needs rank {want}, got {rank}")
    values = (rank.n,) if rank.m is None else (rank.n, rank.m)
    if any(not 0 <= v <= cls.N for v in values):
        raise RankRangeError(f"rank {rank} outside 0..{cls.N} for {cls.label}")


def idem_dim_formula(cls: AlgebraClass, rank: RankClass) -> int:
    """Real dimension of the rank-``rank`` idempotent orbit of ``cls``.

    2*d*n(N-n) for one matrix-ring block; the direct-sum case adds the
    two blocks' contributions.
    """
    validate_rank(cls, rank)
    d = cls.ring.real_dim
    total = rank.n * (cls.N - rank.n)
    if rank.m is not None:
        total += rank.m * (cls.N - rank.m)
    return 2 * d * total


def rank_range(cls: AlgebraClass) -> List[RankClass]:
    """Every orbit label of ``cls``, in row-major order."""
    if cls.simple:
        return [RankClass(n) for n in range(cls.N + 1)]
    return [
        RankClass(n, m) for n in range(cls.N + 1) for m in range(cls.N + 1)
    ]
