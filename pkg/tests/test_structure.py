"""Mod-8 classification table, rank classes, and orbit-dimension formula."""

import pytest

from cliffidem.core import Signature
from cliffidem.errors import RankRangeError
from cliffidem.structure import (
    AlgebraClass,
    RankClass,
    Ring,
    classify_signature,
    idem_dim_formula,
    rank_range,
)
from helpers import all_signatures

# Classical small-dimension isomorphisms, written down independently of
# the classifier: (p, q) -> (ring, N, simple).  Covers every residue of
# p-q mod 8 at least once.
KNOWN_CLASSES = {
    (0, 0): (Ring.REAL, 1, True),
    (1, 0): (Ring.REAL, 1, False),  # R + R
    (0, 1): (Ring.COMPLEX, 1, True),  # C
    (2, 0): (Ring.REAL, 2, True),  # M(2,R)
    (1, 1): (Ring.REAL, 2, True),  # M(2,R)
    (0, 2): (Ring.QUATERNION, 1, True),  # H
    (3, 0): (Ring.COMPLEX, 2, True),  # M(2,C)
    (2, 1): (Ring.REAL, 2, False),  # M(2,R) + M(2,R)
    (1, 2): (Ring.COMPLEX, 2, True),  # M(2,C)
    (0, 3): (Ring.QUATERNION, 1, False),  # H + H
    (4, 0): (Ring.QUATERNION, 2, True),  # M(2,H)
    (0, 4): (Ring.QUATERNION, 2, True),  # M(2,H)
    (1, 3): (Ring.QUATERNION, 2, True),  # M(2,H)
    (5, 0): (Ring.QUATERNION, 2, False),  # M(2,H) + M(2,H)
}


def test_classify_known_small_algebras():
    for (p, q), (ring, n, simple) in KNOWN_CLASSES.items():
        cls = classify_signature(Signature(p, q))
        assert (cls.ring, cls.N, cls.simple) == (ring, n, simple), (p, q)


def test_ring_real_dims():
    assert Ring.REAL.real_dim == 1
    assert Ring.COMPLEX.real_dim == 2
    assert Ring.QUATERNION.real_dim == 4


def test_dimension_identity_every_signature():
    for sig in all_signatures(8):
        cls = classify_signature(sig)
        total = cls.N**2 * cls.ring.real_dim * (1 if cls.simple else 2)
        assert total == sig.size, sig


def test_ring_depends_only_on_residue_and_n_on_dimension():
    by_residue = {}
    for sig in all_signatures(8):
        cls = classify_signature(sig)
        key = (sig.p - sig.q) % 8
        if key in by_residue:
            assert (cls.ring, cls.simple) == by_residue[key]
        else:
            by_residue[key] = (cls.ring, cls.simple)
    assert len(by_residue) == 8


def test_labels():
    assert classify_signature(Signature(3, 0)).label == "M(2,C)"
    assert classify_signature(Signature(1, 0)).label == "M(1,R)+M(1,R)"
    assert classify_signature(Signature(0, 3)).label == "M(1,H)+M(1,H)"


# ---------------------------------------------------------------------------
# RankClass


def test_rank_class_labels_and_parse():
    assert str(RankClass(1)) == "1"
    assert str(RankClass(1, 0)) == "(1,0)"
    assert RankClass.parse("2") == RankClass(2)
    assert RankClass.parse("1,0") == RankClass(1, 0)
    assert RankClass(1).semisimple is False
    assert RankClass(1, 0).semisimple is True
    assert RankClass(3).to_json() == 3
    assert RankClass(2, 1).to_json() == [2, 1]


@pytest.mark.parametrize("text", ["", "x", "1,2,3", "-1", "1,", "1.5"])
def test_rank_class_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        RankClass.parse(text)


# ---------------------------------------------------------------------------
# idem_dim_formula


def test_formula_known_values():
    complex2 = AlgebraClass(ring=Ring.COMPLEX, N=2, simple=True)
    real2 = AlgebraClass(ring=Ring.REAL, N=2, simple=True)
    quat2 = AlgebraClass(ring=Ring.QUATERNION, N=2, simple=True)
    assert idem_dim_formula(complex2, RankClass(1)) == 4
    assert idem_dim_formula(real2, RankClass(1)) == 2
    assert idem_dim_formula(quat2, RankClass(1)) == 8
    assert idem_dim_formula(complex2, RankClass(0)) == 0
    assert idem_dim_formula(complex2, RankClass(2)) == 0


def test_formula_semisimple_values():
    rr = AlgebraClass(ring=Ring.REAL, N=2, simple=False)
    hh = AlgebraClass(ring=Ring.QUATERNION, N=2, simple=False)
    assert idem_dim_formula(rr, RankClass(0, 0)) == 0
    assert idem_dim_formula(rr, RankClass(1, 0)) == 2
    assert idem_dim_formula(rr, RankClass(1, 1)) == 4
    assert idem_dim_formula(hh, RankClass(1, 1)) == 16


def test_formula_symmetry_and_maximum():
    for sig in all_signatures(8):
        cls = classify_signature(sig)
        dims = {}
        for rank in rank_range(cls):
            v = idem_dim_formula(cls, rank)
            assert v >= 0
            if cls.simple:
                assert v == idem_dim_formula(cls, RankClass(cls.N - rank.n))
            else:
                assert v == idem_dim_formula(
                    cls, RankClass(cls.N - rank.n, cls.N - rank.m)
                )
            dims[rank] = v
        best = max(dims.values())
        if cls.simple:
            mid = RankClass(cls.N // 2) if cls.N % 2 == 0 else None
            if mid is not None:
                assert dims[mid] == best
        else:
            if cls.N % 2 == 0:
                assert dims[RankClass(cls.N // 2, cls.N // 2)] == best


def test_formula_rejects_bad_ranks():
    cls = AlgebraClass(ring=Ring.COMPLEX, N=2, simple=True)
    with pytest.raises(RankRangeError):
        idem_dim_formula(cls, RankClass(3))
    with pytest.raises(RankRangeError):
        idem_dim_formula(cls, RankClass(-1))
    with pytest.raises(RankRangeError):
        idem_dim_formula(cls, RankClass(1, 0))  # semisimple rank, simple ring
    ss = AlgebraClass(ring=Ring.REAL, N=1, simple=False)
    with pytest.raises(RankRangeError):
        idem_dim_formula(ss, RankClass(1))
    with pytest.raises(RankRangeError):
        idem_dim_formula(ss, RankClass(1, 2))


# ---------------------------------------------------------------------------
# rank_range


def test_rank_range_simple():
    cls = AlgebraClass(ring=Ring.COMPLEX, N=2, simple=True)
    assert rank_range(cls) == [RankClass(0), RankClass(1), RankClass(2)]
    tiny = AlgebraClass(ring=Ring.REAL, N=1, simple=True)
    assert rank_range(tiny) == [RankClass(0), RankClass(1)]


def test_rank_range_semisimple_row_major():
    cls = AlgebraClass(ring=Ring.REAL, N=1, simple=False)
    assert rank_range(cls) == [
        RankClass(0, 0),
        RankClass(0, 1),
        RankClass(1, 0),
        RankClass(1, 1),
    ]


def test_rank_range_counts():
    for sig in all_signatures(8):
        cls = classify_signature(sig)
        ranks = rank_range(cls)
        expected = (cls.N + 1) ** 2 if not cls.simple else cls.N + 1
        assert len(ranks) == expected
        assert len(set(ranks)) == expected
