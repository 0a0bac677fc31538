"""The full verification suite: every closed form against its brute oracle.

Each check runs an exhaustive grid, comparing independent computation routes
with exact arithmetic (zero tolerance unless a check states its own exact
rational threshold). Two checks are informational: they demonstrate that the
uncorrected blow-up decomposition and the B_1 = -1/2 density series disagree
with the exact counts, as expected, and never affect the overall verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import analysis, counting, sweep
from .analysis import BernoulliConvention
from .combinat import binomial
from .polytope import (
    FibrationParams,
    SimplexParams,
    box_cell_count,
    build_hirzebruch_polytope,
    build_simplex,
    dilate,
)
from .quantization import (
    blowup_count_formula,
    blowup_decomposition,
    hirzebruch_surface_closed_form,
    quantization_dimension,
    untwisted_product_formula,
)


class ResourceLimitExceeded(Exception):
    """Raised when a verification run would exceed its scan budget."""

    def __init__(self, message: str, partial: "VerifyReport"):
        super().__init__(message)
        self.partial = partial


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int
    first_counterexample: str | None = None
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
            "informational": self.informational,
        }


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.checks],
            "overall_pass": self.overall_pass,
        }


@dataclass
class ScanBudget:
    """Desk-scale guard rails for the brute-force scans inside a verify run."""

    cell_limit: int = 1_000_000
    max_polytopes: int = 100_000

    def charge(self, poly) -> None:
        cells = box_cell_count(poly)
        if cells > self.cell_limit:
            raise _BudgetHit(
                f"polytope scan of {cells} cells exceeds the cell limit {self.cell_limit}"
            )


class _BudgetHit(Exception):
    pass


def _grid(dmax: int, amax: int, bmax: int, nmax: int) -> list[FibrationParams]:
    return [
        FibrationParams(d=d, a=a, b=b, n=n)
        for d in range(1, dmax + 1)
        for a in range(amax + 1)
        for b in range(bmax + 1)
        for n in range(nmax + 1)
    ]


def volume_by_slice_integration(p: FibrationParams) -> Fraction:
    """Independent volume oracle: exact term-by-term integration.

    Expand (a + n*(b-t))^d binomially and integrate each (b-t)^k over [0, b],
    then divide by d!. Shares no code with analysis.symplectic_volume.
    """
    total = Fraction(0)
    for k in range(p.d + 1):
        total += (
            binomial(p.d, k)
            * p.a ** (p.d - k)
            * p.n**k
            * Fraction(p.b ** (k + 1), k + 1)
        )
    return total / factorial(p.d)


def check_oracle_grid(
    dmax: int = 3,
    amax: int = 3,
    bmax: int = 3,
    nmax: int = 3,
    budget: ScanBudget | None = None,
    workers: int = 1,
) -> CheckResult:
    """Brute-force count == slice-sum count == term-by-term dimension."""
    budget = budget or ScanBudget()
    grid = _grid(dmax, amax, bmax, nmax)
    if len(grid) > budget.max_polytopes:
        raise _BudgetHit(f"{len(grid)} grid tuples exceed the limit {budget.max_polytopes}")
    result = CheckResult(name="oracle_grid_equivalence", cases=len(grid), failures=0)
    for p in grid:
        poly = build_hirzebruch_polytope(p)
        budget.charge(poly)
        brute = counting.count_brute_force(poly, workers=workers).value
        sliced = counting.count_slice_sum(p).value
        closed = quantization_dimension(p).dimension
        if not (brute == sliced == closed):
            result.failures += 1
            if result.first_counterexample is None:
                result.first_counterexample = (
                    f"{p}: brute={brute} slice={sliced} closed={closed}"
                )
    return result


def check_simplex_closed_form(
    n_max: int = 4, b_max: int = 6, budget: ScanBudget | None = None
) -> CheckResult:
    """Brute-force simplex counts match C(b+N, N)."""
    budget = budget or ScanBudget()
    result = CheckResult(name="projective_space_closed_form", cases=0, failures=0)
    for N in range(1, n_max + 1):
        for b in range(b_max + 1):
            params = SimplexParams(N=N, b=b)
            poly = build_simplex(params)
            budget.charge(poly)
            result.cases += 1
            brute = counting.count_brute_force(poly).value
            closed = counting.count_simplex_closed_form(params).value
            if brute != closed:
                result.failures += 1
                if result.first_counterexample is None:
                    result.first_counterexample = f"{params}: brute={brute} closed={closed}"
    return result


def check_surface_closed_form(pmax: int = 10) -> CheckResult:
    """d = 1 closed form (a+1+n*b/2)(b+1) against the term-by-term sum."""
    result = CheckResult(name="surface_closed_form", cases=0, failures=0)
    for a in range(pmax + 1):
        for b in range(pmax + 1):
            for n in range(pmax + 1):
                result.cases += 1
                lhs = quantization_dimension(FibrationParams(d=1, a=a, b=b, n=n)).dimension
                rhs = hirzebruch_surface_closed_form(a, b, n)
                if lhs != rhs:
                    result.failures += 1
                    if result.first_counterexample is None:
                        result.first_counterexample = f"(a={a},b={b},n={n}): {lhs} != {rhs}"
    return result


def _identity_grid_check(name: str, n: int, fn, dmax: int = 3, abmax: int = 4) -> CheckResult:
    result = CheckResult(name=name, cases=0, failures=0)
    for d in range(1, dmax + 1):
        for a in range(abmax + 1):
            for b in range(abmax + 1):
                p = FibrationParams(d=d, a=a, b=b, n=n)
                result.cases += 1
                report = fn(p)
                if report.residual != 0:
                    result.failures += 1
                    if result.first_counterexample is None:
                        result.first_counterexample = (
                            f"{p}: lhs={report.lhs} rhs={report.rhs} residual={report.residual}"
                        )
    return result


def check_untwisted_product(dmax: int = 3, abmax: int = 4) -> CheckResult:
    return _identity_grid_check("untwisted_factorization", 0, untwisted_product_formula, dmax, abmax)


def check_blowup_binomial(dmax: int = 3, abmax: int = 4) -> CheckResult:
    return _identity_grid_check("blowup_binomial", 1, blowup_count_formula, dmax, abmax)


def check_blowup_decomposition_corrected(dmax: int = 3, abmax: int = 4) -> CheckResult:
    return _identity_grid_check(
        "blowup_decomposition_corrected",
        1,
        lambda p: blowup_decomposition(p, corrected=True),
        dmax,
        abmax,
    )


def check_blowup_decomposition_uncorrected(dmax: int = 3, abmax: int = 4) -> CheckResult:
    """Informational: the uncorrected variant misses by C(a+d,d) - C(a+d-1,d-1).

    A case "fails" here when the variant does NOT show its predicted residual,
    so zero failures means the documented discrepancy is fully reproduced
    (including the d=1, a=1, b=1 counterexample: lhs 5 against rhs 4).
    """
    result = CheckResult(
        name="blowup_decomposition_uncorrected", cases=0, failures=0, informational=True
    )
    for d in range(1, dmax + 1):
        for a in range(abmax + 1):
            for b in range(abmax + 1):
                p = FibrationParams(d=d, a=a, b=b, n=1)
                result.cases += 1
                report = blowup_decomposition(p, corrected=False)
                predicted = binomial(a + d, d) - binomial(a + d - 1, d - 1)
                if report.residual != predicted:
                    result.failures += 1
                    if result.first_counterexample is None:
                        result.first_counterexample = (
                            f"{p}: residual={report.residual} predicted={predicted}"
                        )
    return result


def check_recurrence(dmax: int = 4, abmax: int = 3, n0max: int = 3) -> CheckResult:
    """The (d+1)-st difference of Q in the twist vanishes identically."""
    result = CheckResult(name="recurrence", cases=0, failures=0)
    for d in range(1, dmax + 1):
        for a in range(abmax + 1):
            for b in range(abmax + 1):
                for n0 in range(n0max + 1):
                    result.cases += 1
                    report = analysis.recurrence_residual(d, a, b, n0)
                    if report.residual != 0:
                        result.failures += 1
                        if result.first_counterexample is None:
                            result.first_counterexample = (
                                f"(d={d},a={a},b={b},n0={n0}): residual={report.residual}"
                            )
    return result


def check_volume_integration(dmax: int = 3, amax: int = 3, bmax: int = 3, nmax: int = 3) -> CheckResult:
    """Closed-form volume equals the independent slice-polynomial integral."""
    result = CheckResult(name="volume_vs_integration", cases=0, failures=0)
    for p in _grid(dmax, amax, bmax, nmax):
        result.cases += 1
        closed = analysis.symplectic_volume(p)
        integrated = volume_by_slice_integration(p)
        if closed != integrated:
            result.failures += 1
            if result.first_counterexample is None:
                result.first_counterexample = f"{p}: closed={closed} integral={integrated}"
    return result


def check_ehrhart_dilation(budget: ScanBudget | None = None, workers: int = 1) -> CheckResult:
    """count(k*P)/k^dim approximates the volume: k=100 on (1,1,2,1) within 5%."""
    budget = budget or ScanBudget()
    p = FibrationParams(d=1, a=1, b=2, n=1)
    k = 100
    scaled = dilate(build_hirzebruch_polytope(p), k)
    budget.charge(scaled)
    count = counting.count_brute_force(scaled, workers=workers).value
    volume = analysis.symplectic_volume(p)
    density = Fraction(count, k ** (p.d + 1))
    relative_gap = abs(density - volume) / volume
    result = CheckResult(name="ehrhart_dilation", cases=1, failures=0)
    if relative_gap >= Fraction(1, 20):
        result.failures = 1
        result.first_counterexample = f"relative gap {relative_gap} not below 1/20"
    return result


ASYMPTOTIC_FAMILIES = tuple(
    (d, a, b) for d in (1, 2) for a in (0, 1) for b in (1, 2, 5)
)


def check_asymptotic_bplus(n_list: tuple[int, ...] = (10, 100, 1000)) -> CheckResult:
    """B_1 = +1/2 series: gaps strictly decrease and end below 1/100."""
    if len(n_list) < 2 or any(n < 1 for n in n_list) or list(n_list) != sorted(set(n_list)):
        raise ValueError(f"n list must be strictly increasing positive twists, got {n_list}")
    result = CheckResult(name="asymptotic_gap_bplus", cases=0, failures=0)
    for d, a, b in ASYMPTOTIC_FAMILIES:
        result.cases += 1
        gaps = [pt.gap for pt in analysis.ratio_convergence(d, a, b, n_list)]
        decreasing = all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:]))
        small = gaps[-1] < Fraction(1, 100)
        if not (decreasing and small):
            result.failures += 1
            if result.first_counterexample is None:
                result.first_counterexample = f"(d={d},a={a},b={b}): gaps={gaps}"
    return result


def check_asymptotic_bminus(n_last: int = 1000) -> CheckResult:
    """Informational: the B_1 = -1/2 series stays more than 1 away at d=1, b=1."""
    result = CheckResult(name="asymptotic_gap_bminus", cases=0, failures=0, informational=True)
    for a in (0, 1):
        result.cases += 1
        point = analysis.ratio_convergence(1, a, 1, [n_last], BernoulliConvention.B_MINUS)[0]
        if not point.gap > 1:
            result.failures += 1
            if result.first_counterexample is None:
                result.first_counterexample = f"(d=1,a={a},b=1,n={n_last}): gap={point.gap}"
    return result


def check_sweep_determinism() -> CheckResult:
    """Rendering the same sweep twice yields byte-identical output."""
    result = CheckResult(name="sweep_determinism", cases=0, failures=0)
    for fmt in ("csv", "json"):
        spec = sweep.SweepSpec(
            d_range=(1, 1), a_range=(0, 2), b_range=(1, 2), n_range=(0, 3), fmt=fmt
        )
        result.cases += 1
        if sweep.render_sweep(spec) != sweep.render_sweep(spec):
            result.failures += 1
            result.first_counterexample = f"non-identical {fmt} bytes"
    return result


def check_worker_invariance(budget: ScanBudget | None = None) -> CheckResult:
    """Brute-force counts and profiles are identical for 1 and several workers."""
    budget = budget or ScanBudget()
    result = CheckResult(name="worker_invariance", cases=0, failures=0)
    samples = [
        FibrationParams(d=1, a=1, b=2, n=1),
        FibrationParams(d=2, a=3, b=3, n=2),
        FibrationParams(d=3, a=2, b=1, n=3),
        FibrationParams(d=1, a=0, b=0, n=5),
    ]
    for p in samples:
        poly = build_hirzebruch_polytope(p)
        budget.charge(poly)
        result.cases += 1
        baseline = counting.count_brute_force(poly, workers=1).value
        profile = counting.brute_force_slice_counts(poly, workers=1)
        for workers in (2, 3, 7):
            if (
                counting.count_brute_force(poly, workers=workers).value != baseline
                or counting.brute_force_slice_counts(poly, workers=workers) != profile
            ):
                result.failures += 1
                if result.first_counterexample is None:
                    result.first_counterexample = f"{p} at workers={workers}"
                break
    return result


def run_verification(
    dmax: int = 3,
    amax: int = 3,
    bmax: int = 3,
    nmax: int = 3,
    n_list: tuple[int, ...] = (10, 100, 1000),
    budget: ScanBudget | None = None,
    workers: int = 1,
) -> VerifyReport:
    """Run every check; raise ResourceLimitExceeded (with the partial report)
    when a scan would blow the budget."""
    budget = budget or ScanBudget()
    report = VerifyReport()
    steps = [
        lambda: check_oracle_grid(dmax, amax, bmax, nmax, budget=budget, workers=workers),
        lambda: check_simplex_closed_form(budget=budget),
        check_surface_closed_form,
        check_untwisted_product,
        check_blowup_binomial,
        check_blowup_decomposition_corrected,
        check_blowup_decomposition_uncorrected,
        check_recurrence,
        lambda: check_volume_integration(dmax, amax, bmax, nmax),
        lambda: check_ehrhart_dilation(budget=budget, workers=workers),
        lambda: check_asymptotic_bplus(tuple(n_list)),
        check_asymptotic_bminus,
        check_sweep_determinism,
        lambda: check_worker_invariance(budget=budget),
    ]
    for step in steps:
        try:
            report.checks.append(step())
        except _BudgetHit as hit:
            raise ResourceLimitExceeded(str(hit), partial=report) from None
    return report
