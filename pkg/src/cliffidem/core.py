"""Exact multivector algebra for the real Clifford algebras C^{p,q}.

The algebra on p+q anticommuting generators e_1..e_{p+q}, the first p
squaring to +1 and the rest to -1, has the 2^{p+q} products of distinct
generators (blades) as a linear basis.  A blade is stored as a bitmask
(bit i-1 set when e_i is a factor, ascending factor order canonical);
a multivector is a dense tuple of Fractions indexed by blade mask.  All
arithmetic is exact — there is no floating point anywhere in this
package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import _kernels
from .errors import (
    GradeError,
    JSONFormatError,
    SignatureError,
    SignatureMismatchError,
)

DEFAULT_MAX_DIM = 8

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    """Coerce to Fraction, refusing floats (they are rarely what you meant)."""
    if isinstance(value, float):
        raise TypeError(
            "float coefficients are not accepted; pass Fraction, int or a string"
        )
    return value if type(value) is Fraction else Fraction(value)


@dataclass(frozen=True)
class Signature:
    """The pair (p, q): p generators square to +1, then q square to -1.

    ``max_dim`` caps p+q (default 8, i.e. algebra dimension 256) because
    downstream rank computations work on 2^{p+q} x 2^{p+q} matrices.  It
    does not take part in equality or hashing.
    """

    p: int
    q: int
    max_dim: int = field(default=DEFAULT_MAX_DIM, compare=False, repr=False)

    def __post_init__(self):
        for name in ("p", "q", "max_dim"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise SignatureError(f"{name} must be an integer, got {v!r}")
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"signature ({self.p},{self.q}) has a negative count")
        if self.p + self.q > self.max_dim:
            raise SignatureError(
                f"p+q = {self.p + self.q} exceeds the dimension cap {self.max_dim}"
            )

    @property
    def dim(self) -> int:
        """Number of generators, p+q."""
        return self.p + self.q

    @property
    def size(self) -> int:
        """Linear dimension of the algebra, 2^{p+q}."""
        return 1 << (self.p + self.q)

    def metric(self, i: int) -> int:
        """Square of generator e_i: +1 for i <= p, -1 for p < i <= p+q."""
        if not 1 <= i <= self.dim:
            raise SignatureError(f"generator index {i} outside 1..{self.dim}")
        return 1 if i <= self.p else -1

    def __str__(self) -> str:
        return f"C^{{{self.p},{self.q}}}"


@dataclass(frozen=True)
class Blade:
    """A basis blade, encoded by its generator bitmask (0 is the unit e^0)."""

    mask: int = 0

    def __post_init__(self):
        if not isinstance(self.mask, int) or isinstance(self.mask, bool) or self.mask < 0:
            raise ValueError(f"blade mask must be a nonnegative integer, got {self.mask!r}")

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple:
        """Ascending 1-based generator indices of the factors."""
        m = self.mask
        return tuple(i + 1 for i in range(m.bit_length()) if m >> i & 1)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Blade":
        mask = 0
        for i in indices:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError(f"generator indices are 1-based integers, got {i!r}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"repeated generator index {i}")
            mask |= bit
        return cls(mask)

    def __str__(self) -> str:
        return "e" + ("0" if not self.mask else "".join(map(str, self.indices)))


@functools.lru_cache(maxsize=None)
def _sign_table(p: int, q: int):
    return _kernels.sign_table(p, q)


def blade_product(a: Blade, b: Blade, sig: Signature) -> tuple:
    """Product of two basis blades: (sign, result blade).

    The result mask is the symmetric difference of the factors; the sign
    counts interleaving transpositions and the metric of each cancelled
    common generator.
    """
    if a.mask >= sig.size or b.mask >= sig.size:
        raise SignatureError(f"blade does not fit in {sig}")
    sign = _kernels.blade_sign(a.mask, b.mask, sig.p, sig.q)
    return sign, Blade(a.mask ^ b.mask)


class Multivector:
    """An element of C^{p,q}: a dense tuple of Fractions, one per blade.

    Instances are immutable; every operation returns a new value.  ``*``
    is the geometric product for two multivectors and scaling for a
    rational scalar.
    """

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs: Iterable):
        values = tuple(_as_fraction(c) for c in coeffs)
        if len(values) != sig.size:
            raise ValueError(
                f"need {sig.size} coefficients for {sig}, got {len(values)}"
            )
        self.sig = sig
        self.coeffs = values

    @classmethod
    def _raw(cls, sig: Signature, coeffs: tuple) -> "Multivector":
        """Internal fast path: trusts coeffs to be a correct Fraction tuple."""
        mv = object.__new__(cls)
        mv.sig = sig
        mv.coeffs = coeffs
        return mv

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls._raw(sig, (_ZERO,) * sig.size)

    @classmethod
    def one(cls, sig: Signature) -> "Multivector":
        """The algebra unit e^0."""
        return cls._raw(sig, (_ONE,) + (_ZERO,) * (sig.size - 1))

    @classmethod
    def from_terms(cls, sig: Signature, terms: Mapping) -> "Multivector":
        """Build from {generator-index tuple: coefficient}; e.g. {(): 1, (1, 2): q}."""
        coeffs = [_ZERO] * sig.size
        for indices, coeff in terms.items():
            blade = Blade.from_indices(indices)
            if blade.mask >= sig.size:
                raise SignatureError(f"blade {blade} does not fit in {sig}")
            coeffs[blade.mask] = _as_fraction(coeff)
        return cls._raw(sig, tuple(coeffs))

    # -- vector-space structure -------------------------------------------

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatchError(
                f"operands live in {self.sig} and {other.sig}"
            )

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_sig(other)
        return Multivector._raw(
            self.sig, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_sig(other)
        return Multivector._raw(
            self.sig, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return Multivector._raw(self.sig, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, float):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return Multivector._raw(self.sig, tuple(c * s for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, float):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return Multivector._raw(self.sig, tuple(s * c for c in self.coeffs))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, float):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sig, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- algebra ------------------------------------------------------------

    def scalar_part(self) -> Fraction:
        return self.coeffs[0]

    def grade_project(self, k: int) -> "Multivector":
        return grade_project(self, k)

    # -- presentation ---------------------------------------------------------

    def __repr__(self):
        terms = [
            f"{c}*{Blade(m)}" for m, c in enumerate(self.coeffs) if c
        ]
        body = " + ".join(terms) if terms else "0"
        return f"<{self.sig}: {body}>"

    def to_json_dict(self) -> dict:
        """The published JSON form; zero coefficients are omitted."""
        return {
            "p": self.sig.p,
            "q": self.sig.q,
            "terms": [
                {"blade": list(Blade(m).indices), "coeff": str(c)}
                for m, c in enumerate(self.coeffs)
                if c
            ],
        }


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """The (associative, unital) product of the algebra."""
    a._check_sig(b)
    sig = a.sig
    table = _sign_table(sig.p, sig.q)
    return Multivector._raw(sig, _kernels.gp_dense(a.coeffs, b.coeffs, table, sig.dim))


def scalar_part(a: Multivector) -> Fraction:
    """Coefficient of the unit blade e^0."""
    return a.coeffs[0]


def grade_project(a: Multivector, k: int) -> Multivector:
    """Keep exactly the grade-k coefficients."""
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= a.sig.dim:
        raise GradeError(f"grade {k!r} outside 0..{a.sig.dim}")
    return Multivector._raw(
        a.sig,
        tuple(c if m.bit_count() == k else _ZERO for m, c in enumerate(a.coeffs)),
    )


@dataclass(frozen=True)
class PseudoscalarInfo:
    """The top blade omega = e_1 e_2 ... e_{p+q}, with its key properties."""

    element: Multivector
    central: bool
    square_sign: int


def pseudoscalar(sig: Signature) -> PseudoscalarInfo:
    """omega, whether it commutes with every generator, and the sign of omega^2."""
    top = sig.size - 1
    element = Multivector._raw(
        sig, tuple(_ONE if m == top else _ZERO for m in range(sig.size))
    )
    central = all(
        _kernels.blade_sign(top, 1 << (i - 1), sig.p, sig.q)
        == _kernels.blade_sign(1 << (i - 1), top, sig.p, sig.q)
        for i in range(1, sig.dim + 1)
    )
    square_sign = _kernels.blade_sign(top, top, sig.p, sig.q)
    return PseudoscalarInfo(element=element, central=central, square_sign=square_sign)


# -- JSON ---------------------------------------------------------------------


def _json_int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise JSONFormatError(f"'{key}' must be an integer, got {v!r}")
    return v


def multivector_from_json(doc, max_dim: int = DEFAULT_MAX_DIM) -> Multivector:
    """Parse the published JSON form (a dict; see Multivector.to_json_dict).

    Strict by design: unknown keys, repeated or unsorted blades, floats
    and unparsable coefficient strings are all rejected.
    """
    if not isinstance(doc, dict):
        raise JSONFormatError(f"multivector document must be an object, got {type(doc).__name__}")
    extra = set(doc) - {"p", "q", "terms"}
    if extra:
        raise JSONFormatError(f"unknown keys in multivector document: {sorted(extra)}")
    p = _json_int(doc, "p")
    q = _json_int(doc, "q")
    try:
        sig = Signature(p, q, max_dim=max_dim)
    except SignatureError as exc:
        raise JSONFormatError(str(exc)) from exc
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise JSONFormatError("'terms' must be a list")
    coeffs = [_ZERO] * sig.size
    seen = set()
    for term in terms:
        if not isinstance(term, dict) or set(term) != {"blade", "coeff"}:
            raise JSONFormatError(f"bad term entry: {term!r}")
        blade = term["blade"]
        if not isinstance(blade, list) or any(
            not isinstance(i, int) or isinstance(i, bool) for i in blade
        ):
            raise JSONFormatError(f"'blade' must be a list of integers: {blade!r}")
        if blade != sorted(blade):
            raise JSONFormatError(f"blade indices must be ascending: {blade!r}")
        if any(not 1 <= i <= sig.dim for i in blade):
            raise JSONFormatError(f"blade {blade!r} has indices outside 1..{sig.dim}")
        try:
            mask = Blade.from_indices(blade).mask
        except ValueError as exc:
            raise JSONFormatError(str(exc)) from exc
        if mask in seen:
            raise JSONFormatError(f"blade {blade!r} appears twice")
        seen.add(mask)
        raw = term["coeff"]
        if isinstance(raw, bool) or not isinstance(raw, (int, str)):
            raise JSONFormatError(
                f"'coeff' must be an integer or a rational string, got {raw!r}"
            )
        try:
            coeffs[mask] = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise JSONFormatError(f"bad coefficient {raw!r}: {exc}") from exc
    return Multivector._raw(sig, tuple(coeffs))
