"""Lower bounds on Hamming correlation and the optimality verdicts built on them.

Everything is integer arithmetic.  The average-correlation bound is tested
in its cross-multiplied form ``M (S_a + S_c) >= N L (N L - M)`` so that
optimality is an exact equality check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import CorrelationReport

OPTIMAL = "optimal"
NEAR_OPTIMAL = "near_optimal"
NOT_OPTIMAL = "not_optimal"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class OptimalityVerdict:
    bound_name: str
    verdict: str
    witnesses: dict = field(default_factory=dict)

    @property
    def is_optimal(self) -> bool:
        return self.verdict == OPTIMAL


def lg_bound(N: int, M: int) -> int:
    """Lempel-Greenberger lower bound on a single sequence's out-of-phase peak."""
    if N < 2 or M < 1:
        raise ValueError("need N >= 2 and M >= 1")
    b = N % M
    num = (N - b) * (N + b - M)
    den = M * (N - 1)
    return -(-num // den)


def peng_fan_sides(N: int, M: int, L: int, la: int, lc: int) -> tuple[int, int]:
    lhs = M * (N - 1) * la + N * M * (L - 1) * lc
    rhs = N * (N * L - M)
    return lhs, rhs


def peng_fan_holds(N: int, M: int, L: int, la: int, lc: int) -> bool:
    """Whether the integer pair (la, lc) satisfies the Peng-Fan inequality.

    The inequality is evaluated as written for any integers, negative ones
    included.  A set with H_a = 0 but large H_c is then not optimal, because
    (-1, H_c - 1) still satisfies it.
    """
    lhs, rhs = peng_fan_sides(N, M, L, la, lc)
    return lhs >= rhs


def _is_optimal_pair(N: int, M: int, L: int, la: int, lc: int) -> bool:
    # the linear form is increasing in both coordinates, so delta = 1 decides
    return peng_fan_holds(N, M, L, la, lc) and not peng_fan_holds(N, M, L, la - 1, lc - 1)


def mhc_verdict(report: CorrelationReport, N: int, M: int, L: int) -> OptimalityVerdict:
    if L < 2 or N < 2 or report.H_a is None or report.H_c is None:
        return OptimalityVerdict("peng_fan", UNDEFINED, {"N": N, "M": M, "L": L})
    ha, hc = report.H_a, report.H_c
    lhs, rhs = peng_fan_sides(N, M, L, ha, hc)
    lhs1, _ = peng_fan_sides(N, M, L, ha - 1, hc - 1)
    lhs2, _ = peng_fan_sides(N, M, L, ha - 2, hc - 2)
    if _is_optimal_pair(N, M, L, ha, hc):
        verdict = OPTIMAL
    elif _is_optimal_pair(N, M, L, ha - 1, hc - 1):
        verdict = NEAR_OPTIMAL
    else:
        verdict = NOT_OPTIMAL
    return OptimalityVerdict("peng_fan", verdict, {
        "N": N, "M": M, "L": L, "H_a": ha, "H_c": hc, "delta": 1,
        "lhs": lhs, "lhs_minus_1": lhs1, "lhs_minus_2": lhs2, "rhs": rhs,
    })


def ahc_sides(report: CorrelationReport, N: int, M: int, L: int) -> tuple[int, int]:
    """Integer form of the average-correlation bound: (M (S_a + S_c), N L (N L - M))."""
    total = report.require("S_a") + report.require("S_c")
    return M * total, N * L * (N * L - M)


def ahc_verdict(report: CorrelationReport, N: int, M: int, L: int) -> OptimalityVerdict:
    if N < 2 or L < 2 or report.S_a is None or report.S_c is None:
        return OptimalityVerdict("ahc", UNDEFINED, {"N": N, "M": M, "L": L})
    lhs, rhs = ahc_sides(report, N, M, L)
    # lhs < rhs cannot happen for a correct report; it is reported, not masked
    return OptimalityVerdict("ahc", OPTIMAL if lhs == rhs else NOT_OPTIMAL,
                             {"N": N, "M": M, "L": L, "S_a": report.S_a,
                              "S_c": report.S_c, "lhs": lhs, "rhs": rhs})


def ahc_rational_sides(report: CorrelationReport, N: int, M: int, L: int) -> tuple[Fraction, Fraction]:
    """The bound in its original rational form, from the averages alone."""
    a_a, a_c = report.require("A_a"), report.require("A_c")
    lhs = a_a / (N * (L - 1)) + a_c / (N - 1)
    rhs = Fraction(N * L - M, M * (N - 1) * (L - 1))
    return lhs, rhs


def lg_verdict(peak: int, N: int, M: int) -> OptimalityVerdict:
    """Single-sequence verdict: optimal iff the out-of-phase peak meets the bound."""
    bound = lg_bound(N, M)
    verdict = OPTIMAL if peak == bound else NOT_OPTIMAL
    return OptimalityVerdict("lempel_greenberger", verdict, {"N": N, "M": M, "peak": peak, "bound": bound})
