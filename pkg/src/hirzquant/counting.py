"""Lattice-point counts by three independent routes, plus the monomial basis.

The brute-force route scans the bounding box and tests membership; it is the
ground truth every closed form is checked against. The scan runs on the
compiled kernel when it is importable and the data provably fits in int64,
and on the pure-Python kernel otherwise (or always, when the environment
variable HIRZQUANT_PURE is set to a nonempty value other than "0").
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from . import _purecount
from .combinat import binomial
from .polytope import FibrationParams, HPolytope, LatticePoint, SimplexParams, bounding_box, contains

try:
    from . import _fastcount
except ImportError:
    _fastcount = None

_FORCE_PURE = os.environ.get("HIRZQUANT_PURE", "") not in ("", "0")

# Compiled-path safety margin: every row evaluation, box edge value and the
# total cell count must stay below this for int64 arithmetic to be safe.
_INT64_SAFE = 1 << 60


class CountMethod(Enum):
    BRUTE_FORCE = "BruteForce"
    SLICE_SUM = "SliceSum"
    CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class CountResult:
    """A nonnegative exact count plus the route that produced it."""

    value: int
    method: CountMethod

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"count cannot be negative, got {self.value}")

    def to_json(self) -> dict:
        # Decimal string: counts overflow 64-bit JSON consumers at large parameters.
        return {"value": str(self.value), "method": self.method.value}


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent tuples of the monomial basis, in lexicographic order."""

    exponents: tuple[LatticePoint, ...]

    def __len__(self) -> int:
        return len(self.exponents)

    def to_json(self) -> list:
        return [list(e) for e in self.exponents]


def active_backend() -> str:
    """Name of the kernel the dispatcher prefers: 'compiled' or 'pure'."""
    return "pure" if (_fastcount is None or _FORCE_PURE) else "compiled"


def count_brute_force(poly: HPolytope, workers: int = 1) -> CountResult:
    """Exact point count by scanning the bounding box and testing every cell.

    `workers` > 1 partitions the outermost (last) coordinate range into
    contiguous chunks; the result is identical for every worker count.
    """
    total, _ = _boxed_count(poly, workers)
    return CountResult(value=total, method=CountMethod.BRUTE_FORCE)


def brute_force_slice_counts(poly: HPolytope, workers: int = 1) -> tuple[int, ...]:
    """Per-height counts along the last coordinate, from the same single scan.

    Entry i counts the points whose last coordinate is box_lower[-1] + i; for
    the twisted-bundle family this is exactly the foliation profile.
    """
    _, profile = _boxed_count(poly, workers)
    return tuple(profile)


def count_simplex_closed_form(p: SimplexParams) -> CountResult:
    """Points of the scaled simplex in closed form: C(b + N, N)."""
    return CountResult(value=binomial(p.b + p.N, p.N), method=CountMethod.CLOSED_FORM)


def count_slice_sum(p: FibrationParams) -> CountResult:
    """Sum of per-height simplex counts: sum_t C(a + n*(b-t) + d, d) for t = 0..b."""
    total = sum(binomial(p.a + p.n * (p.b - t) + p.d, p.d) for t in range(p.b + 1))
    return CountResult(value=total, method=CountMethod.SLICE_SUM)


def monomial_basis(poly: HPolytope) -> MonomialBasis:
    """All lattice points of the polytope as exponent tuples, in lex order."""
    lo, hi = bounding_box(poly)
    axes = [range(l, h + 1) for l, h in zip(lo, hi)]
    points = tuple(pt for pt in itertools.product(*axes) if contains(poly, pt))
    return MonomialBasis(exponents=points)


def _boxed_count(poly: HPolytope, workers: int) -> tuple[int, list[int]]:
    lo, hi = bounding_box(poly)
    coeffs = [row for row, _ in poly.rows]
    bounds = [bound for _, bound in poly.rows]
    width = hi[-1] - lo[-1] + 1
    if workers <= 1 or width <= 1:
        return _count_box(coeffs, bounds, list(lo), list(hi))

    pieces = _split_range(lo[-1], hi[-1], workers)

    def run(piece: tuple[int, int]) -> tuple[int, list[int]]:
        sub_lo, sub_hi = list(lo), list(hi)
        sub_lo[-1], sub_hi[-1] = piece
        return _count_box(coeffs, bounds, sub_lo, sub_hi)

    with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
        results = list(pool.map(run, pieces))
    total = sum(t for t, _ in results)
    profile = [c for _, prof in results for c in prof]
    return total, profile


def _count_box(coeffs, bounds, lower, upper) -> tuple[int, list[int]]:
    if _fastcount is not None and not _FORCE_PURE and _fits_compiled(coeffs, bounds, lower, upper):
        return _fastcount.count_box(coeffs, bounds, lower, upper)
    return _purecount.count_box(coeffs, bounds, lower, upper)


def _fits_compiled(coeffs, bounds, lower, upper) -> bool:
    cells = 1
    for lo_j, hi_j in zip(lower, upper):
        if abs(lo_j) >= _INT64_SAFE or abs(hi_j) >= _INT64_SAFE:
            return False
        cells *= max(0, hi_j - lo_j + 1)
    if cells >= _INT64_SAFE:
        return False
    for row, bound in zip(coeffs, bounds):
        if abs(bound) >= _INT64_SAFE:
            return False
        reach = sum(abs(c) * max(abs(lo_j), abs(hi_j)) for c, lo_j, hi_j in zip(row, lower, upper))
        if reach >= _INT64_SAFE:
            return False
    return True


def _split_range(lo: int, hi: int, workers: int) -> list[tuple[int, int]]:
    width = hi - lo + 1
    k = max(1, min(workers, width))
    base, extra = divmod(width, k)
    pieces = []
    start = lo
    for i in range(k):
        size = base + (1 if i < extra else 0)
        pieces.append((start, start + size - 1))
        start += size
    return pieces
