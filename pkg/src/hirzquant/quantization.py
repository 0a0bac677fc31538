"""The quantization dimension of the twisted-bundle family and its identities.

For parameters (d, a, b, n) the dimension is the lattice count

    Q(d, a, b, n) = sum_{i=0}^{b} C(a + d + n*i, d),

whose i = 0 term is the base contribution C(a+d, d) (the quantization of CP^d
at scale a) and whose i >= 1 terms come from the fibers. Special twists admit
shorter forms:

* d = 1 (ordinary ruled surfaces):  (a + 1 + n*b/2) * (b + 1);
* n = 0 (trivial bundle, a product): C(a+d, d) * (b + 1);
* n = 1 (blow-up of CP^(d+1) along a CP^(d-1)):
  C(a+b+d+1, d+1) - C(a+d, d+1).

The n = 1 count also decomposes as big space minus removed chunk plus the
points of the exceptional locus. Two variants of that decomposition are
implemented: the Pascal-consistent one, whose residual is always zero, and an
uncorrected variant whose last term is C(a+d-1, d-1) and which undercounts by
exactly C(a+d, d) - C(a+d-1, d-1); both are reported with exact residuals
rather than booleans so the discrepancy stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinat import binomial
from .polytope import FibrationParams


class IdentityName(Enum):
    UNTWISTED_PRODUCT = "untwisted_product"
    BLOWUP_BINOMIAL = "blowup_binomial"
    BLOWUP_DECOMPOSITION_CORRECTED = "blowup_decomposition_corrected"
    BLOWUP_DECOMPOSITION_UNCORRECTED = "blowup_decomposition_uncorrected"


@dataclass(frozen=True)
class QuantizationRecord:
    """Exact dimension with its base/fiber breakdown."""

    params: FibrationParams
    dimension: int
    base_term: int
    fiber_terms: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "dimension": str(self.dimension),
            "base_term": str(self.base_term),
            "fiber_terms": [str(t) for t in self.fiber_terms],
        }


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of an identity and their exact difference."""

    identity_name: IdentityName
    lhs: int
    rhs: int
    residual: int

    def __post_init__(self):
        if self.residual != self.lhs - self.rhs:
            raise ValueError("residual must equal lhs - rhs")

    @property
    def holds(self) -> bool:
        return self.residual == 0

    def to_json(self) -> dict:
        return {
            "identity_name": self.identity_name.value,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "residual": str(self.residual),
        }


def quantization_dimension(p: FibrationParams) -> QuantizationRecord:
    """Evaluate Q(d, a, b, n) = sum_{i=0}^{b} C(a + d + n*i, d) term by term."""
    terms = [binomial(p.a + p.d + p.n * i, p.d) for i in range(p.b + 1)]
    return QuantizationRecord(
        params=p,
        dimension=sum(terms),
        base_term=terms[0],
        fiber_terms=tuple(terms[1:]),
    )


def hirzebruch_surface_closed_form(a: int, b: int, n: int) -> int:
    """d = 1 closed form (a + 1 + n*b/2) * (b + 1), verified integral.

    The product is an integer for all nonnegative a, b, n: when b is odd,
    b + 1 is even and absorbs the half.
    """
    if min(a, b, n) < 0:
        raise ValueError("parameters must be nonnegative")
    value = (Fraction(n * b, 2) + a + 1) * (b + 1)
    assert value.denominator == 1, f"non-integral surface count {value}"
    return int(value)


def untwisted_product_formula(p: FibrationParams) -> IdentityReport:
    """n = 0 factorization: Q = C(a+d, d) * (b + 1)."""
    if p.n != 0:
        raise ValueError(f"product formula requires n=0, got n={p.n}")
    lhs = quantization_dimension(p).dimension
    rhs = binomial(p.a + p.d, p.d) * (p.b + 1)
    return IdentityReport(IdentityName.UNTWISTED_PRODUCT, lhs, rhs, lhs - rhs)


def blowup_count_formula(p: FibrationParams) -> IdentityReport:
    """n = 1 closed form: Q = C(a+b+d+1, d+1) - C(a+d, d+1)."""
    if p.n != 1:
        raise ValueError(f"blow-up formula requires n=1, got n={p.n}")
    lhs = quantization_dimension(p).dimension
    rhs = binomial(p.a + p.b + p.d + 1, p.d + 1) - binomial(p.a + p.d, p.d + 1)
    return IdentityReport(IdentityName.BLOWUP_BINOMIAL, lhs, rhs, lhs - rhs)


def blowup_decomposition(p: FibrationParams, corrected: bool = True) -> IdentityReport:
    """n = 1 decomposition into big space minus chunk plus exceptional locus.

    corrected=True uses C(a+d, d) as the last term, which Pascal's rule forces:
      C(a+d+1, d+1) - C(a+d, d+1) = C(a+d, d);
    that variant has residual 0 identically. corrected=False evaluates the
    variant ending in C(a+d-1, d-1) instead (the count for a CP^(d-1) factor
    at scale a; a point contributing one dimension when d = 1), whose residual
    is exactly C(a+d, d) - C(a+d-1, d-1), nonzero whenever a >= 1.
    """
    if p.n != 1:
        raise ValueError(f"blow-up decomposition requires n=1, got n={p.n}")
    lhs = quantization_dimension(p).dimension
    head = binomial(p.a + p.b + p.d + 1, p.d + 1) - binomial(p.a + p.d + 1, p.d + 1)
    if corrected:
        name = IdentityName.BLOWUP_DECOMPOSITION_CORRECTED
        rhs = head + binomial(p.a + p.d, p.d)
    else:
        name = IdentityName.BLOWUP_DECOMPOSITION_UNCORRECTED
        rhs = head + binomial(p.a + p.d - 1, p.d - 1)
    return IdentityReport(name, lhs, rhs, lhs - rhs)
