"""Deterministic command-line front end.

Subcommands::

    table1       matrix-ring class and orbit dimensions, all p+q <= max-dim
    classify     read one Multivector as JSON, report rank and tangent dim
    sample       seeded random idempotents of a chosen orbit, verified
    verify-dims  sweep every signature and rank: exact nullity vs formula
    variety      sample the four explicit quadric families

Output is JSON lines (sorted keys, compact separators) or CSV with a
fixed column order, so identical flags always produce identical bytes.
Exit codes: 0 success, 1 verification disagreement or retry exhaustion,
2 usage/parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import DEFAULT_MAX_DIM, Multivector, Signature, multivector_from_json
from .engine import is_idempotent, tangent_dimension
from .errors import (
    CliffidemError,
    DegenerateParameterError,
    FamilySearchError,
    RetryBudgetError,
)
from .sampler import DEFAULT_MAX_TRIES, sample_idempotent
from .structure import RankClass, classify_signature, idem_dim_formula, rank_range
from .varieties import (
    ExampleFamily,
    VectorPairPoint,
    XYZPoint,
    example_idempotent,
    get_family,
    rational_variety_point,
    variety_residuals,
)

_FAMILY_ORDER = ("C30", "C12", "C20", "C11")

_QUATERNION_NOTE = (
    "odd quaternionic rank: orbit realized and dimension verified; "
    "see the rank-convention note in the README"
)


# ---------------------------------------------------------------------------
# serialization


def _jsonify(value):
    if isinstance(value, RankClass):
        return value.to_json()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Multivector):
        return value.to_json_dict()
    if isinstance(value, (VectorPairPoint, XYZPoint)):
        return value.to_json_dict()
    if isinstance(value, (list, tuple)):
        return [_jsonify(item) for item in value]
    if isinstance(value, dict):
        return {key: _jsonify(item) for key, item in value.items()}
    return value


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (RankClass, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_cell(item) for item in value)
    if isinstance(value, (dict, Multivector, VectorPairPoint, XYZPoint)):
        return json.dumps(_jsonify(value), sort_keys=True, separators=(",", ":"))
    return str(value)


def _emit(rows: List[Dict], columns: Sequence[str], args) -> None:
    """Render rows in the requested format and write them out."""
    if args.format == "json":
        text = "".join(
            json.dumps(_jsonify(row), sort_keys=True, separators=(",", ":")) + "\n"
            for row in rows
        )
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(column)) for column in columns])
        text = buffer.getvalue()
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as handle:
            handle.write(text)


# ---------------------------------------------------------------------------
# flag parsing helpers


def _parse_signature(text: str, max_dim: int) -> Signature:
    parts = text.split(",")
    if len(parts) != 2 or not all(part.strip().lstrip("-").isdigit() for part in parts):
        raise ValueError(f"--signature must look like 'P,Q', got {text!r}")
    return Signature(int(parts[0]), int(parts[1]), max_dim=max_dim)


def _signatures(max_dim: int) -> List[Signature]:
    """Every signature with p+q <= max_dim: total dimension ascending,
    then p descending."""
    return [
        Signature(p, d - p, max_dim=max_dim)
        for d in range(max_dim + 1)
        for p in range(d, -1, -1)
    ]


def _check_nonnegative(args, names: Sequence[str]) -> None:
    for name in names:
        if getattr(args, name) < 0:
            raise ValueError(f"--{name.replace('_', '-')} must be >= 0")


# ---------------------------------------------------------------------------
# subcommands


def cmd_table1(args) -> int:
    _check_nonnegative(args, ["max_dim"])
    rows = []
    for sig in _signatures(args.max_dim):
        cls = classify_signature(sig)
        labels = rank_range(cls)
        rows.append(
            {
                "p": sig.p,
                "q": sig.q,
                "ring": cls.ring.value,
                "N": cls.N,
                "simple": cls.simple,
                "ranks": [str(label) for label in labels],
                "dims": [idem_dim_formula(cls, label) for label in labels],
            }
        )
    _emit(rows, ("p", "q", "ring", "N", "simple", "ranks", "dims"), args)
    return 0


def cmd_classify(args) -> int:
    _check_nonnegative(args, ["max_dim"])
    if args.infile is None:
        text = sys.stdin.read()
    else:
        with open(args.infile) as handle:
            text = handle.read()
    element = multivector_from_json(json.loads(text), max_dim=args.max_dim)
    if not is_idempotent(element):
        row = {
            "idempotent": False,
            "rank": None,
            "tangent_dim": None,
            "formula_dim": None,
            "agrees": None,
        }
        status = 0
    else:
        report = tangent_dimension(element)
        row = {
            "idempotent": True,
            "rank": report.rank,
            "tangent_dim": report.nullity,
            "formula_dim": report.formula_value,
            "agrees": report.agrees,
        }
        status = 0 if report.agrees else 1
    _emit([row], ("idempotent", "rank", "tangent_dim", "formula_dim", "agrees"), args)
    return status


def cmd_sample(args) -> int:
    _check_nonnegative(args, ["count", "max_dim", "max_tries"])
    sig = _parse_signature(args.signature, args.max_dim)
    cls = classify_signature(sig)
    rank = RankClass.parse(args.rank)
    idem_dim_formula(cls, rank)  # validates the rank against the class
    rows = []
    status = 0
    for i in range(args.count):
        seed = args.seed + i
        element = sample_idempotent(sig, rank, seed, max_tries=args.max_tries)
        report = tangent_dimension(element)
        verified = report.agrees and report.rank == rank
        rows.append(
            {
                "p": sig.p,
                "q": sig.q,
                "seed": seed,
                "rank": report.rank,
                "tangent_dim": report.nullity,
                "formula_dim": report.formula_value,
                "agrees": verified,
                "element": element,
            }
        )
        if not verified:
            status = 1
    _emit(
        rows,
        ("p", "q", "seed", "rank", "tangent_dim", "formula_dim", "agrees", "element"),
        args,
    )
    return status


def cmd_verify_dims(args) -> int:
    _check_nonnegative(args, ["max_dim", "max_tries", "seed"])
    if args.samples_per_rank < 1:
        raise ValueError("--samples-per-rank must be >= 1")
    rows = []
    agree = disagree = 0
    for sig in _signatures(args.max_dim):
        cls = classify_signature(sig)
        for rank in rank_range(cls):
            formula = idem_dim_formula(cls, rank)
            nullities = []
            for i in range(args.samples_per_rank):
                element = sample_idempotent(
                    sig, rank, args.seed + i, max_tries=args.max_tries
                )
                nullities.append(tangent_dimension(element).nullity)
            agrees = all(nullity == formula for nullity in nullities)
            odd_quaternion = cls.ring.value == "H" and (
                rank.n % 2 == 1 or (rank.m is not None and rank.m % 2 == 1)
            )
            rows.append(
                {
                    "p": sig.p,
                    "q": sig.q,
                    "rank": rank,
                    "nullity": nullities[0],
                    "formula": formula,
                    "agrees": agrees,
                    "note": _QUATERNION_NOTE if odd_quaternion else "",
                }
            )
            if agrees:
                agree += 1
            else:
                disagree += 1
    if args.format == "json":
        rows.append(
            {
                "signatures": len(_signatures(args.max_dim)),
                "checks": agree + disagree,
                "agree": agree,
                "disagree": disagree,
            }
        )
    _emit(rows, ("p", "q", "rank", "nullity", "formula", "agrees", "note"), args)
    print(
        f"verify-dims: {agree + disagree} rank classes across "
        f"{len(_signatures(args.max_dim))} signatures: "
        f"{agree} agree, {disagree} disagree",
        file=sys.stderr,
    )
    return 0 if disagree == 0 else 1


def _draw_variety_point(
    family: ExampleFamily, rng: random.Random
) -> Tuple[Tuple[Fraction, ...], object]:
    count = 2 if family.kind == "xyz" else 5
    for _ in range(1000):
        params = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(count)
        )
        try:
            return params, rational_variety_point(family, params)
        except DegenerateParameterError:
            continue
    raise RetryBudgetError(f"no non-degenerate parameters found for {family.tag}")


def cmd_variety(args) -> int:
    _check_nonnegative(args, ["count", "seed"])
    tags = _FAMILY_ORDER if args.family == "all" else (args.family,)
    rng = random.Random(args.seed)
    rows = []
    status = 0
    for tag in tags:
        family = get_family(tag)
        for _ in range(args.count):
            params, point = _draw_variety_point(family, rng)
            residuals = variety_residuals(family, point)
            element = example_idempotent(family, point)
            report = tangent_dimension(element)
            verified = report.agrees and not any(residuals)
            rows.append(
                {
                    "family": tag,
                    "params": list(params),
                    "point": point,
                    "residuals": list(residuals),
                    "tangent_dim": report.nullity,
                    "formula_dim": report.formula_value,
                    "agrees": verified,
                    "idempotent": element,
                }
            )
            if not verified:
                status = 1
    _emit(
        rows,
        (
            "family",
            "params",
            "point",
            "residuals",
            "tangent_dim",
            "formula_dim",
            "agrees",
            "idempotent",
        ),
        args,
    )
    return status


# ---------------------------------------------------------------------------
# argument parser and entry points


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffidem",
        description="Exact idempotent geometry of real Clifford algebras C^{p,q}.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_output_flags(sub) -> None:
        sub.add_argument(
            "--format",
            choices=("json", "csv"),
            default="json",
            help="output format (default: json, one object per line)",
        )
        sub.add_argument(
            "--out",
            metavar="PATH",
            default=None,
            help="write output to this file instead of stdout",
        )

    table1 = subparsers.add_parser(
        "table1",
        help="matrix-ring class of every C^{p,q} with the orbit dimensions per rank",
    )
    table1.add_argument(
        "--max-dim",
        type=int,
        default=DEFAULT_MAX_DIM,
        help=f"largest p+q to include (default {DEFAULT_MAX_DIM})",
    )
    add_output_flags(table1)
    table1.set_defaults(func=cmd_table1)

    classify = subparsers.add_parser(
        "classify",
        help="read one multivector as JSON and report its rank and tangent dimension",
    )
    classify.add_argument(
        "--in",
        dest="infile",
        metavar="PATH",
        default=None,
        help="input file (default: stdin)",
    )
    classify.add_argument(
        "--max-dim",
        type=int,
        default=DEFAULT_MAX_DIM,
        help=f"largest p+q to accept (default {DEFAULT_MAX_DIM})",
    )
    add_output_flags(classify)
    classify.set_defaults(func=cmd_classify)

    sample = subparsers.add_parser(
        "sample",
        help="seeded random idempotents of one orbit, classified and verified",
    )
    sample.add_argument(
        "--signature", required=True, metavar="P,Q", help="algebra signature"
    )
    sample.add_argument(
        "--rank", required=True, metavar="N[,M]", help="orbit label: n, or n,m"
    )
    sample.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    sample.add_argument(
        "--count", type=int, default=1, help="how many samples (default 1)"
    )
    sample.add_argument(
        "--max-tries",
        type=int,
        default=DEFAULT_MAX_TRIES,
        help=f"retry budget per sample (default {DEFAULT_MAX_TRIES})",
    )
    sample.add_argument(
        "--max-dim",
        type=int,
        default=DEFAULT_MAX_DIM,
        help=f"largest p+q to accept (default {DEFAULT_MAX_DIM})",
    )
    add_output_flags(sample)
    sample.set_defaults(func=cmd_sample)

    verify = subparsers.add_parser(
        "verify-dims",
        help="sweep every signature and rank: exact tangent nullity vs the formula",
    )
    verify.add_argument(
        "--max-dim", type=int, default=4, help="largest p+q to sweep (default 4)"
    )
    verify.add_argument(
        "--samples-per-rank",
        type=int,
        default=3,
        help="seeded samples per rank class (default 3)",
    )
    verify.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    verify.add_argument(
        "--max-tries",
        type=int,
        default=DEFAULT_MAX_TRIES,
        help=f"retry budget per sample (default {DEFAULT_MAX_TRIES})",
    )
    add_output_flags(verify)
    verify.set_defaults(func=cmd_verify_dims)

    variety = subparsers.add_parser(
        "variety",
        help="sample the explicit quadric families with residuals and tangent dims",
    )
    variety.add_argument(
        "--family",
        choices=_FAMILY_ORDER + ("all",),
        default="all",
        help="which family to sample (default: all four)",
    )
    variety.add_argument(
        "--count", type=int, default=5, help="points per family (default 5)"
    )
    variety.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    add_output_flags(variety)
    variety.set_defaults(func=cmd_variety)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RetryBudgetError, FamilySearchError) as exc:
        print(f"cliffidem {args.command}: {exc}", file=sys.stderr)
        return 1
    except (CliffidemError, ValueError, KeyError, OSError) as exc:
        print(f"cliffidem {args.command}: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
