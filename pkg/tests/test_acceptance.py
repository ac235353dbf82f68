"""Acceptance suite: ten numbered criteria, one printed line each.

Each criterion emits a ``CRITERION nn PASS/FAIL`` line with its elapsed
time, written past pytest's output capture so it shows up in a plain
``pytest -v`` run.  Every assertion is exact; the runtime figures are
informational, never asserted.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager, nullcontext
from fractions import Fraction as F

import pytest

from cliffidem.cli import main as cli_main
from cliffidem.core import Multivector, Signature, geometric_product
from cliffidem.engine import is_idempotent, rank_class, tangent_dimension
from cliffidem.errors import DegenerateParameterError
from cliffidem.sampler import canonical_idempotent, primitive_family, sample_idempotent
from cliffidem.structure import RankClass, classify_signature, idem_dim_formula, rank_range
from cliffidem.varieties import (
    example_idempotent,
    extract_point,
    family_element,
    get_family,
    rational_variety_point,
    variety_residuals,
)


_CAPTURE_MANAGER = None


@pytest.fixture(autouse=True)
def _criterion_reporter(request):
    global _CAPTURE_MANAGER
    _CAPTURE_MANAGER = request.config.pluginmanager.getplugin("capturemanager")
    yield


def _emit(line):
    suspend = (
        _CAPTURE_MANAGER.global_and_fixture_disabled()
        if _CAPTURE_MANAGER is not None
        else nullcontext()
    )
    with suspend:
        print("\n" + line, flush=True)


@contextmanager
def criterion(number, message):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _emit(f"CRITERION {number:2d} FAIL  {message} ({time.perf_counter() - start:.2f}s)")
        raise
    _emit(f"CRITERION {number:2d} PASS  {message} ({time.perf_counter() - start:.2f}s)")


def all_signatures(max_dim):
    return [
        Signature(p, d - p)
        for d in range(max_dim + 1)
        for p in range(d, -1, -1)
    ]


# the mod-8 classification, stated independently: residue of p-q ->
# (ring tag, exponent of N as a function of d = p+q, simple?)
MOD8_ROWS = {
    0: ("R", lambda d: d // 2, True),
    1: ("R", lambda d: (d - 1) // 2, False),
    2: ("R", lambda d: d // 2, True),
    3: ("C", lambda d: (d - 1) // 2, True),
    4: ("H", lambda d: (d - 2) // 2, True),
    5: ("H", lambda d: (d - 3) // 2, False),
    6: ("H", lambda d: (d - 2) // 2, True),
    7: ("C", lambda d: (d - 1) // 2, True),
}

RING_DIM = {"R": 1, "C": 2, "H": 4}


def test_criterion_01_matrix_ring_table():
    with criterion(1, "mod-8 matrix-ring table reproduced for all p+q <= 8"):
        for sig in all_signatures(8):
            ring_tag, exponent, simple = MOD8_ROWS[(sig.p - sig.q) % 8]
            cls = classify_signature(sig)
            assert cls.ring.value == ring_tag, sig
            assert cls.N == 2 ** exponent(sig.dim), sig
            assert cls.simple == simple, sig
            blocks = 1 if cls.simple else 2
            assert cls.N**2 * RING_DIM[ring_tag] * blocks == 2**sig.dim, sig


def test_criterion_02_complex_rank1_dimension_4():
    with criterion(2, "rank-1 idempotents of C^{3,0} and C^{1,2} have tangent dim 4"):
        for tag, (p, q) in (("C30", (3, 0)), ("C12", (1, 2))):
            sig = Signature(p, q)
            canonical = canonical_idempotent(sig, RankClass(1))
            report = tangent_dimension(canonical)
            assert report.rank == RankClass(1)
            assert report.nullity == 4
            family = get_family(tag)
            point = rational_variety_point(family, (F(1, 2), F(1), F(1), F(0), F(0)))
            assert tangent_dimension(example_idempotent(family, point)).nullity == 4
            assert 4 == 2 * 2 * 1 * (2 - 1)  # 2 * dim_R(C) * n * (N - n)


def test_criterion_03_real_rank1_dimension_2():
    with criterion(3, "rank-1 idempotents of C^{2,0} and C^{1,1} have tangent dim 2"):
        for tag, (p, q) in (("C20", (2, 0)), ("C11", (1, 1))):
            sig = Signature(p, q)
            report = tangent_dimension(canonical_idempotent(sig, RankClass(1)))
            assert report.rank == RankClass(1)
            assert report.nullity == 2
            family = get_family(tag)
            point = rational_variety_point(family, (F(1, 3), F(1, 2)))
            assert tangent_dimension(example_idempotent(family, point)).nullity == 2
            assert 2 == 2 * 1 * 1 * (2 - 1)  # 2 * dim_R(R) * n * (N - n)


def test_criterion_04_dimension_formula_sweep():
    with criterion(4, "tangent nullity == orbit formula: all p+q <= 5, all ranks, 5 seeds"):
        checked = 0
        for sig in all_signatures(5):
            cls = classify_signature(sig)
            for rank in rank_range(cls):
                expected = idem_dim_formula(cls, rank)
                for seed in range(5):
                    element = sample_idempotent(sig, rank, seed)
                    report = tangent_dimension(element)
                    assert report.rank == rank, (sig, rank, seed)
                    assert report.nullity == expected, (sig, rank, seed)
                    checked += 1
        assert checked == 5 * sum(
            len(rank_range(classify_signature(sig))) for sig in all_signatures(5)
        )


def _random_params(family, rng):
    count = 2 if family.kind == "xyz" else 5
    return tuple(F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(count))


def _random_point(family, rng):
    while True:
        try:
            return rational_variety_point(family, _random_params(family, rng))
        except DegenerateParameterError:
            continue


def test_criterion_05_variety_equivalence():
    with criterion(5, "on-variety <=> idempotent (100 + 100 points per family), with round-trips"):
        rng = random.Random(1729)
        for tag in ("C30", "C12", "C20", "C11"):
            family = get_family(tag)
            for _ in range(100):
                point = _random_point(family, rng)
                assert variety_residuals(family, point) == (
                    (F(0), F(0)) if family.kind == "vector_pair" else (F(0),)
                )
                element = example_idempotent(family, point)
                assert is_idempotent(element)
                assert extract_point(family, element) == point
            failures = 0
            while failures < 100:
                point = _random_point(family, rng)
                bump = F(rng.randint(1, 5), rng.randint(1, 5))
                if family.kind == "xyz":
                    bad = type(point)(point.x + bump, point.y, point.z)
                else:
                    bad = type(point)(
                        y=(point.y[0] + bump,) + point.y[1:], z=point.z
                    )
                if not any(variety_residuals(family, bad)):
                    continue
                assert not is_idempotent(family_element(family, bad))
                failures += 1


def test_criterion_06_primitive_families():
    with criterion(6, "primitive families: annihilation, unity, ranks, size (p+q <= 6)"):
        for sig in all_signatures(6):
            cls = classify_signature(sig)
            family = primitive_family(sig)
            members = family.members
            expected_size = cls.N if cls.simple else 2 * cls.N
            assert len(members) == expected_size, sig
            assert expected_size & (expected_size - 1) == 0  # a power of two
            total = Multivector.zero(sig)
            for member in members:
                total = total + member
            assert total == Multivector.one(sig), sig
            for i, a in enumerate(members):
                for j, b in enumerate(members):
                    product = geometric_product(a, b)
                    if i == j:
                        assert product == a, (sig, i)
                    else:
                        assert product.is_zero(), (sig, i, j)
            allowed = (
                {RankClass(1)} if cls.simple else {RankClass(1, 0), RankClass(0, 1)}
            )
            for member in members:
                assert rank_class(member) in allowed, sig


def test_criterion_07_orbit_invariance():
    with criterion(7, "rank_class(S A S^-1) == rank_class(A), 20 seeds, all p+q <= 4"):
        for sig in all_signatures(4):
            cls = classify_signature(sig)
            for rank in rank_range(cls):
                assert rank_class(canonical_idempotent(sig, rank)) == rank
                for seed in range(20):
                    conjugate = sample_idempotent(sig, rank, seed)
                    assert rank_class(conjugate) == rank, (sig, rank, seed)


def test_criterion_08_semisimple_isolation():
    with criterion(8, "C^{1,0}: four canonical idempotents, each of tangent dim 0"):
        sig = Signature(1, 0)
        half = F(1, 2)
        four = {
            RankClass(0, 0): Multivector.zero(sig),
            RankClass(1, 1): Multivector.one(sig),
            RankClass(1, 0): Multivector.from_terms(sig, {(): half, (1,): half}),
            RankClass(0, 1): Multivector.from_terms(sig, {(): half, (1,): -half}),
        }
        cls = classify_signature(sig)
        assert set(rank_range(cls)) == set(four)
        for label, element in four.items():
            assert is_idempotent(element)
            report = tangent_dimension(element)
            assert report.rank == label
            assert report.nullity == 0
            assert report.formula_value == 0
            assert idem_dim_formula(cls, label) == 2 * (
                label.n * (1 - label.n) + label.m * (1 - label.m)
            )


def test_criterion_09_quaternionic_parity_probe(tmp_path):
    with criterion(9, "C^{1,3} rank 1 exists, tangent dim 8, noted in the verify report"):
        sig = Signature(1, 3)
        cls = classify_signature(sig)
        assert cls.ring.value == "H" and cls.N == 2 and cls.simple
        member = primitive_family(sig).members[0]
        assert rank_class(member) == RankClass(1)
        report = tangent_dimension(member)
        assert report.nullity == 8
        assert report.nullity == 2 * 4 * 1 * (2 - 1)  # 2 * dim_R(H) * n * (N - n)
        out = tmp_path / "verify.jsonl"
        code = cli_main(
            ["verify-dims", "--max-dim", "4", "--samples-per-rank", "1",
             "--out", str(out)]
        )
        assert code == 0
        rows = [json.loads(line) for line in out.read_text().splitlines()]
        probe = next(
            row for row in rows
            if row.get("p") == 1 and row.get("q") == 3 and row.get("rank") == 1
        )
        assert probe["nullity"] == 8
        assert probe["agrees"] is True
        assert "quaternionic" in probe["note"]


def test_criterion_10_cli_determinism(tmp_path):
    with criterion(10, "every CLI subcommand is byte-identical across two runs"):
        element = tmp_path / "element.json"
        element.write_text(
            '{"p":1,"q":0,"terms":[{"blade":[],"coeff":"1/2"},'
            '{"blade":[1],"coeff":"1/2"}]}'
        )
        invocations = [
            ["table1", "--max-dim", "5"],
            ["table1", "--max-dim", "3", "--format", "csv"],
            ["classify", "--in", str(element)],
            ["sample", "--signature", "2,1", "--rank", "1,1", "--seed", "13",
             "--count", "3"],
            ["sample", "--signature", "3,0", "--rank", "2", "--seed", "5",
             "--format", "csv"],
            ["verify-dims", "--max-dim", "3", "--samples-per-rank", "2"],
            ["variety", "--count", "2", "--seed", "41"],
            ["variety", "--family", "C12", "--count", "3", "--seed", "8",
             "--format", "csv"],
        ]
        for argv in invocations:
            runs = [
                subprocess.run(
                    [sys.executable, "-m", "cliffidem"] + argv,
                    capture_output=True,
                )
                for _ in range(2)
            ]
            assert runs[0].returncode == 0, (argv, runs[0].stderr)
            assert runs[0].returncode == runs[1].returncode
            assert runs[0].stdout == runs[1].stdout, argv
            assert runs[0].stdout, argv
            assert runs[0].stderr == runs[1].stderr, argv
