#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the three hot loops — sign-table construction, the dense
geometric product, and integer matrix rank — on identical inputs for
both backends and prints a comparison table.  Results are asserted
equal along the way, so this doubles as a cross-check.

Run:  python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import random
import time
from fractions import Fraction

from cliffidem._kernels import _pure

try:
    from cliffidem._kernels import _fast
except ImportError:
    _fast = None

from cliffidem.core import Signature
from cliffidem.engine import tangent_map_matrix
from cliffidem.linalg import _integer_rows
from cliffidem.sampler import canonical_idempotent
from cliffidem.structure import RankClass


def best_time(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def dense_coeffs(size, rng):
    return tuple(
        Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9)) for _ in range(size)
    )


def random_int_matrix(n, rng):
    return [[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]


def build_workloads():
    rng = random.Random(1729)
    workloads = []

    for dim in (6, 8):
        p, q = (dim + 1) // 2, dim // 2
        workloads.append(
            (
                "sign_table",
                f"C^{{{p},{q}}} ({(1 << dim) ** 2} signs)",
                lambda impl, p=p, q=q: impl.sign_table(p, q),
            )
        )

    for dim in (6, 8):
        p, q = (dim + 1) // 2, dim // 2
        size = 1 << dim
        a = dense_coeffs(size, rng)
        b = dense_coeffs(size, rng)
        workloads.append(
            (
                "gp_dense",
                f"dense*dense, d={dim} ({size * size} terms)",
                lambda impl, a=a, b=b, p=p, q=q, dim=dim: impl.gp_dense(
                    a, b, impl.sign_table(p, q), dim
                ),
            )
        )

    tangent = _integer_rows(
        tangent_map_matrix(canonical_idempotent(Signature(3, 3), RankClass(3)))
    )
    workloads.append(
        (
            "int_rank",
            "64x64 tangent map of C^{3,3}",
            lambda impl, m=tangent: impl.int_rank(m),
        )
    )
    for n in (48, 96):
        m = random_int_matrix(n, rng)
        workloads.append(
            (
                "int_rank",
                f"{n}x{n} random integers",
                lambda impl, m=m: impl.int_rank(m),
            )
        )
    return workloads


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeats", type=int, default=3, help="timing repeats, best is kept"
    )
    args = parser.parse_args()

    header = f"{'kernel':<11} {'workload':<34} {'python':>10}"
    if _fast is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for kernel, label, call in build_workloads():
        pure_time, pure_result = best_time(lambda: call(_pure), args.repeats)
        line = f"{kernel:<11} {label:<34} {pure_time * 1000:>8.2f}ms"
        if _fast is not None:
            fast_time, fast_result = best_time(lambda: call(_fast), args.repeats)
            if kernel == "sign_table":
                assert list(pure_result) == list(fast_result)
            else:
                assert pure_result == fast_result
            line += f" {fast_time * 1000:>8.2f}ms {pure_time / fast_time:>7.1f}x"
        print(line)

    if _fast is None:
        print("\ncompiled extension not built; showing the pure backend only")


if __name__ == "__main__":
    main()
