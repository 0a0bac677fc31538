#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python fallback.

Scans a ladder of twisted-bundle polytopes of growing box size with both
kernels, reports cells/second and the speedup, and cross-checks that the two
kernels return identical counts.

Run from the repository root (after `python setup.py build_ext --inplace`):

    python benchmarks/bench_count.py [--max-cells N]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hirzquant import _purecount
from hirzquant.polytope import FibrationParams, bounding_box, box_cell_count, build_hirzebruch_polytope

try:
    from hirzquant import _fastcount
except ImportError:
    _fastcount = None

LADDER = [
    FibrationParams(d=1, a=5, b=40, n=2),
    FibrationParams(d=2, a=4, b=20, n=2),
    FibrationParams(d=2, a=5, b=60, n=3),
    FibrationParams(d=3, a=3, b=12, n=2),
    FibrationParams(d=3, a=4, b=20, n=3),
]


def run_kernel(kernel, poly) -> tuple[int, float]:
    lo, hi = bounding_box(poly)
    coeffs = [row for row, _ in poly.rows]
    bounds = [bound for _, bound in poly.rows]
    start = time.perf_counter()
    total, _ = kernel.count_box(coeffs, bounds, list(lo), list(hi))
    return total, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-cells", type=int, default=20_000_000, help="skip polytopes with bigger boxes"
    )
    args = parser.parse_args()

    if _fastcount is None:
        print("compiled kernel not built; run `python setup.py build_ext --inplace` first")

    header = f"{'params':>26} {'cells':>12} {'count':>10} {'pure s':>9} {'fast s':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for p in LADDER:
        poly = build_hirzebruch_polytope(p)
        cells = box_cell_count(poly)
        if cells > args.max_cells:
            continue
        pure_count, pure_time = run_kernel(_purecount, poly)
        if _fastcount is not None:
            fast_count, fast_time = run_kernel(_fastcount, poly)
            if fast_count != pure_count:
                print(f"MISMATCH on {p}: pure={pure_count} fast={fast_count}")
                return 1
            speedup = f"{pure_time / fast_time:8.1f}" if fast_time > 0 else "     inf"
            fast_col = f"{fast_time:9.4f}"
        else:
            speedup, fast_col = "       -", "        -"
        label = f"(d={p.d},a={p.a},b={p.b},n={p.n})"
        print(f"{label:>26} {cells:>12} {pure_count:>10} {pure_time:9.4f} {fast_col} {speedup}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
