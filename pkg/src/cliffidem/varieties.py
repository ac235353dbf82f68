"""Explicit rank-1 idempotent families over quadric varieties.

Four small algebras admit a complete hand-parametrization of their
rank-1 idempotents through 2x2 matrix representations A = (I + phi
. sigma)/2 with sigma the Pauli triple:

* C30 (C^{3,0}) and C12 (C^{1,2}), both isomorphic to M(2,C): phi =
  y + iz with real 3-vectors satisfying y^2 - z^2 = 1 and y.z = 0 — a
  hyperboloid intersected with a cone in R^6, dimension 4.
* C20 (C^{2,0}) and C11 (C^{1,1}), both isomorphic to M(2,R): phi =
  (x, iz, y) with x^2 + y^2 - z^2 = 1 — a one-sheet hyperboloid in
  R^3, dimension 2.

Each family fixes explicit generator images; a blade's label is the
product of its generators' images (the matrix form is the ground truth
and every blade label is derived from it, so labels stay consistent
with the geometric product).  Points carry exact rational coordinates,
and two rational parametrizations supply unlimited on-variety points.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .core import Blade, Multivector, Signature, scalar_part
from .engine import is_idempotent, rank_class
from .errors import (
    DegenerateParameterError,
    ExtractionError,
    NotIdempotentError,
    OffVarietyError,
    RankRangeError,
    SignatureMismatchError,
)
from .structure import RankClass

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("coordinates must be exact rationals, not floats")
    return value if type(value) is Fraction else Fraction(value)


@dataclass(frozen=True)
class ComplexQ:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __add__(self, other: "ComplexQ") -> "ComplexQ":
        return ComplexQ(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "ComplexQ") -> "ComplexQ":
        return ComplexQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scaled(self, s: Fraction) -> "ComplexQ":
        return ComplexQ(s * self.re, s * self.im)


_C0 = ComplexQ(_ZERO, _ZERO)
_C1 = ComplexQ(_ONE, _ZERO)
_CI = ComplexQ(_ZERO, _ONE)
_CM1 = ComplexQ(-_ONE, _ZERO)
_CMI = ComplexQ(_ZERO, -_ONE)

Matrix = Tuple[Tuple[ComplexQ, ComplexQ], Tuple[ComplexQ, ComplexQ]]

_IDENTITY: Matrix = ((_C1, _C0), (_C0, _C1))
_SIGMA1: Matrix = ((_C0, _C1), (_C1, _C0))
_SIGMA2: Matrix = ((_C0, _CMI), (_CI, _C0))
_SIGMA3: Matrix = ((_C1, _C0), (_C0, _CM1))
_I_SIGMA2: Matrix = ((_C0, _C1), (_CM1, _C0))
_I_SIGMA3: Matrix = ((_CI, _C0), (_C0, _CMI))


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(x[i][0] * y[0][j] + x[i][1] * y[1][j] for j in range(2))
        for i in range(2)
    )


def _mat_add(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(x[i][j] + y[i][j] for j in range(2)) for i in range(2))


def _mat_scale(s: Fraction, x: Matrix) -> Matrix:
    return tuple(tuple(x[i][j].scaled(s) for j in range(2)) for i in range(2))


@dataclass(frozen=True)
class VectorPairPoint:
    """A point (y, z) of the R^6 variety y^2 - z^2 = 1, y.z = 0."""

    y: Tuple[Fraction, Fraction, Fraction]
    z: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        for name in ("y", "z"):
            vec = tuple(_frac(v) for v in getattr(self, name))
            if len(vec) != 3:
                raise ValueError(f"{name} must have three components")
            object.__setattr__(self, name, vec)

    def to_json_dict(self) -> dict:
        return {"y": [str(v) for v in self.y], "z": [str(v) for v in self.z]}


@dataclass(frozen=True)
class XYZPoint:
    """A point of the one-sheet hyperboloid x^2 + y^2 - z^2 = 1."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def to_json_dict(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "z": str(self.z)}


@dataclass(frozen=True)
class ExampleFamily:
    """One explicit family: generator images plus derived blade labels.

    ``slot_labels`` maps each point coordinate — (y1,y2,y3,z1,z2,z3) or
    (x,y,z) — to the blade that carries it and the sign it enters with,
    so the element is (e^0 + sum_i sign_i c_i blade_i)/2.
    """

    tag: str
    sig: Signature
    kind: str  # "vector_pair" or "xyz"
    generator_images: Tuple[Matrix, ...]
    slot_labels: Tuple[Tuple[Tuple[int, ...], int], ...]


FAMILIES: Dict[str, ExampleFamily] = {
    "C30": ExampleFamily(
        tag="C30",
        sig=Signature(3, 0),
        kind="vector_pair",
        generator_images=(_SIGMA1, _SIGMA2, _SIGMA3),
        slot_labels=(
            ((1,), 1),
            ((2,), 1),
            ((3,), 1),  # y . sigma
            ((2, 3), 1),
            ((1, 3), -1),
            ((1, 2), 1),  # z . (i sigma)
        ),
    ),
    "C12": ExampleFamily(
        tag="C12",
        sig=Signature(1, 2),
        kind="vector_pair",
        generator_images=(_SIGMA1, _I_SIGMA2, _I_SIGMA3),
        slot_labels=(
            ((1,), 1),
            ((1, 3), 1),
            ((1, 2), -1),  # y . sigma
            ((2, 3), -1),
            ((2,), 1),
            ((3,), 1),  # z . (i sigma)
        ),
    ),
    "C20": ExampleFamily(
        tag="C20",
        sig=Signature(2, 0),
        kind="xyz",
        generator_images=(_SIGMA3, _SIGMA1),
        slot_labels=(((2,), 1), ((1,), 1), ((1, 2), 1)),  # x, y, z
    ),
    "C11": ExampleFamily(
        tag="C11",
        sig=Signature(1, 1),
        kind="xyz",
        generator_images=(_SIGMA1, _I_SIGMA2),
        slot_labels=(((1,), 1), ((1, 2), -1), ((2,), 1)),  # x, y, z
    ),
}


def get_family(tag: str) -> ExampleFamily:
    """Look up one of C30, C12, C20, C11."""
    return FAMILIES[tag]


@functools.lru_cache(maxsize=None)
def _blade_images(tag: str) -> Tuple[Matrix, ...]:
    fam = FAMILIES[tag]
    images = [_IDENTITY] * fam.sig.size
    for mask in range(1, fam.sig.size):
        low = mask & -mask
        rest = mask ^ low
        images[mask] = _mat_mul(fam.generator_images[low.bit_length() - 1], images[rest])
    return tuple(images)


def blade_image(family: ExampleFamily, blade: Blade) -> Matrix:
    """The 2x2 matrix a blade maps to (products of generator images)."""
    return _blade_images(family.tag)[blade.mask]


def matrix_image(family: ExampleFamily, a: Multivector) -> Matrix:
    """Image of a whole multivector under the family's representation."""
    if a.sig != family.sig:
        raise SignatureMismatchError(f"element of {a.sig} given to family {family.tag}")
    images = _blade_images(family.tag)
    out = _mat_scale(_ZERO, _IDENTITY)
    for mask, c in enumerate(a.coeffs):
        if c:
            out = _mat_add(out, _mat_scale(c, images[mask]))
    return out


def _point_slots(family: ExampleFamily, point) -> Tuple[Fraction, ...]:
    if family.kind == "vector_pair":
        if not isinstance(point, VectorPairPoint):
            raise TypeError(f"family {family.tag} needs a VectorPairPoint")
        return point.y + point.z
    if not isinstance(point, XYZPoint):
        raise TypeError(f"family {family.tag} needs an XYZPoint")
    return (point.x, point.y, point.z)


def variety_residuals(family: ExampleFamily, point) -> Tuple[Fraction, ...]:
    """How far a point is from its variety, as exact residuals.

    (y^2 - z^2 - 1, y.z) for the vector-pair families, (x^2 + y^2 -
    z^2 - 1,) for the hyperboloid families; all zeros exactly when the
    point parametrizes an idempotent.
    """
    _point_slots(family, point)  # type check
    if family.kind == "vector_pair":
        norm = sum(v * v for v in point.y) - sum(v * v for v in point.z)
        dot = sum(a * b for a, b in zip(point.y, point.z))
        return (norm - 1, dot)
    return (point.x**2 + point.y**2 - point.z**2 - 1,)


def family_element(family: ExampleFamily, point) -> Multivector:
    """The combination (e^0 + sum sign_i c_i blade_i)/2, no questions asked.

    On-variety points give idempotents; off-variety points do not
    (useful for testing the equivalence from both sides).
    """
    slots = _point_slots(family, point)
    terms = {(): _HALF}
    for (indices, sign), value in zip(family.slot_labels, slots):
        terms[indices] = sign * value * _HALF
    return Multivector.from_terms(family.sig, terms)


def example_idempotent(family: ExampleFamily, point) -> Multivector:
    """The family's idempotent at an exactly on-variety point."""
    residuals = variety_residuals(family, point)
    if any(residuals):
        raise OffVarietyError(
            f"point is not on the {family.tag} variety; residuals {residuals}"
        )
    return family_element(family, point)


def extract_point(family: ExampleFamily, a: Multivector):
    """Coordinates of a rank-1 idempotent (inverse of example_idempotent).

    Every rank-1 idempotent of these four algebras has the displayed
    coefficient form, so after the idempotency and rank checks the
    coordinates can be read straight off the blade coefficients.
    """
    if a.sig != family.sig:
        raise SignatureMismatchError(f"element of {a.sig} given to family {family.tag}")
    if not is_idempotent(a):
        raise NotIdempotentError("only idempotents have variety coordinates")
    label = rank_class(a)
    if label != RankClass(1):
        raise RankRangeError(
            f"extraction needs rank 1, got {label} (scalar part {scalar_part(a)})"
        )
    slots = [
        2 * sign * a.coeffs[Blade.from_indices(indices).mask]
        for indices, sign in family.slot_labels
    ]
    if family.kind == "vector_pair":
        point = VectorPairPoint(y=tuple(slots[:3]), z=tuple(slots[3:]))
    else:
        point = XYZPoint(*slots)
    if family_element(family, point) != a:
        raise ExtractionError(
            f"rank-1 idempotent is not of the {family.tag} coefficient form"
        )
    return point


def rational_variety_point(family: ExampleFamily, params):
    """Exact on-variety points from free rational parameters.

    Hyperboloid families take (t, u) and use a stereographic-style map
    x = (1 - t^2 - u^2)/D, y = 2t/D, z = 2tu/D with D = 1 + t^2 - u^2
    (undefined at D = 0).  Vector-pair families take (t, q0, q1, q2,
    q3): t builds the hyperbolic pair c = (1+t^2)/(1-t^2), s =
    2t/(1-t^2) with c^2 - s^2 = 1, and the quaternion q (nonzero, not
    necessarily unit) builds an exact rotation whose first two columns
    give orthogonal unit vectors; then y = c*col1 and z = s*col2.
    """
    values = tuple(_frac(v) for v in params)
    if family.kind == "xyz":
        if len(values) != 2:
            raise ValueError(f"family {family.tag} takes parameters (t, u)")
        t, u = values
        den = 1 + t * t - u * u
        if den == 0:
            raise DegenerateParameterError(
                f"(t,u)=({t},{u}) hits the degenerate locus 1 + t^2 = u^2"
            )
        return XYZPoint(
            x=(1 - t * t - u * u) / den, y=2 * t / den, z=2 * t * u / den
        )
    if len(values) != 5:
        raise ValueError(f"family {family.tag} takes parameters (t, q0, q1, q2, q3)")
    t, q0, q1, q2, q3 = values
    if t * t == 1:
        raise DegenerateParameterError("t = +-1 degenerates the hyperbolic pair")
    norm = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3
    if norm == 0:
        raise DegenerateParameterError("the zero quaternion gives no rotation")
    c = (1 + t * t) / (1 - t * t)
    s = 2 * t / (1 - t * t)
    col1 = (
        (q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3) / norm,
        2 * (q1 * q2 + q0 * q3) / norm,
        2 * (q1 * q3 - q0 * q2) / norm,
    )
    col2 = (
        2 * (q1 * q2 - q0 * q3) / norm,
        (q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3) / norm,
        2 * (q2 * q3 + q0 * q1) / norm,
    )
    return VectorPairPoint(
        y=tuple(c * v for v in col1), z=tuple(s * v for v in col2)
    )
