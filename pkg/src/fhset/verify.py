"""Seeded property suite: correlation-sum identities, cyclotomic class sums,
interleaving invariance and bound soundness.

Output is a pure function of (seed, cases, max_q); nothing time-dependent is
printed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .algebra import build_field, divisors, prime_power, NotPrimePower
from .bounds import ahc_sides, ahc_verdict, lg_bound, peng_fan_holds
from .constructions import InterleaveMap, interleave
from .core import CorrelationReport, FhsSet, full_report, verify_sum_identities
from .cyclotomy import build_scheme, class_sum_identity

ReportFn = Callable[[FhsSet], CorrelationReport]


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        out = f"{tag}  {self.name:<28} {self.cases} cases"
        if self.failures:
            out += f"; first counterexample: {self.failures[0]}"
        return out


def random_set(rng: np.random.Generator, max_n: int = 64, max_m: int = 16, max_l: int = 8) -> FhsSet:
    N = int(rng.integers(1, max_n + 1))
    M = int(rng.integers(1, max_m + 1))
    L = int(rng.integers(1, max_l + 1))
    return FhsSet(rng.integers(0, M, size=(L, N)), M, None,
                  {"construction": "random", "params": {"N": N, "M": M, "L": L}})


def random_uniform_set(rng: np.random.Generator, max_n: int = 64, max_m: int = 16,
                       max_l: int = 8) -> FhsSet:
    """Random set whose pooled symbol counts are all equal (hence AHC-optimal)."""
    while True:
        N = int(rng.integers(2, max_n + 1))
        L = int(rng.integers(2, max_l + 1))
        choices = [m for m in divisors(N * L) if 2 <= m <= max_m]
        if choices:
            break
    M = int(rng.choice(choices))
    pool = np.repeat(np.arange(M), N * L // M)
    return FhsSet(rng.permutation(pool).reshape(L, N), M, None,
                  {"construction": "random_uniform", "params": {"N": N, "M": M, "L": L}})


def _params(fset: FhsSet) -> dict:
    return {"N": fset.N, "M": fset.M, "L": fset.L, "rows": fset.symbols.tolist()}


def check_identities(rng, cases: int, report_fn: ReportFn) -> PropertyResult:
    res = PropertyResult("sum identities")
    for _ in range(cases):
        s = random_set(rng)
        res.cases += 1
        if not verify_sum_identities(s, report_fn(s)):
            res.failures.append(_params(s))
    return res


def check_class_sums(max_q: int) -> PropertyResult:
    res = PropertyResult("cyclotomic class sums")
    for q in range(3, max_q + 1):
        try:
            prime_power(q)
        except NotPrimePower:
            continue
        ctx = build_field(q)
        for M in divisors(q - 1):
            if M < 2:
                continue
            res.cases += 1
            if not all(class_sum_identity(build_scheme(ctx, M))):
                res.failures.append({"q": q, "M": M})
    return res


def check_interleaving(rng, cases: int, report_fn: ReportFn) -> PropertyResult:
    res = PropertyResult("interleaving invariance")
    for c in range(cases):
        s = random_uniform_set(rng) if c % 2 == 0 else random_set(rng)
        N, L = s.N, s.L
        targets = [n for n in divisors(N * L) if n >= 2 and N * L // n >= 2]
        if s.N < 2 or s.L < 2 or not targets:
            s = random_uniform_set(rng)
            N, L = s.N, s.L
            targets = [n for n in divisors(N * L) if n >= 2 and N * L // n >= 2]
        N2 = int(rng.choice(targets))
        y = interleave(s, InterleaveMap.random(rng, N, L, N2))
        rx, ry = report_fn(s), report_fn(y)
        res.cases += 1
        same_sum = rx.S_a + rx.S_c == ry.S_a + ry.S_c
        same_verdict = (ahc_verdict(rx, N, s.M, L).verdict
                        == ahc_verdict(ry, y.N, y.M, y.L).verdict)
        if not (same_sum and same_verdict):
            res.failures.append({"source": _params(s), "target_N": N2})
    return res


def bound_violations(fset: FhsSet, report: CorrelationReport) -> list[str]:
    """Names of the bounds that the attained statistics violate (expected: none)."""
    N, M, L = fset.shape
    bad = []
    if N >= 2 and any(h < lg_bound(N, M) for h in report.auto_max):
        bad.append("lempel_greenberger")
    if N >= 2 and L >= 2:
        if not peng_fan_holds(N, M, L, report.H_a, report.H_c):
            bad.append("peng_fan")
        lhs, rhs = ahc_sides(report, N, M, L)
        if lhs < rhs:
            bad.append("ahc")
    return bad


def check_bounds(rng, cases: int, report_fn: ReportFn) -> PropertyResult:
    res = PropertyResult("bound soundness")
    for _ in range(cases):
        s = random_set(rng)
        res.cases += 1
        bad = bound_violations(s, report_fn(s))
        if bad:
            res.failures.append({"violated": bad, **_params(s)})
    return res


def run_suite(seed: int = 0, cases: int = 1000, max_q: int = 4096,
              report_fn: Optional[ReportFn] = None) -> list[PropertyResult]:
    report_fn = report_fn or full_report
    rng = np.random.default_rng(seed)
    fuzz = max(1, cases // 10)
    return [
        check_identities(rng, cases, report_fn),
        check_class_sums(max_q),
        check_interleaving(rng, fuzz, report_fn),
        check_bounds(rng, cases, report_fn),
    ]


def render(results: list[PropertyResult]) -> str:
    lines = [r.line() for r in results]
    lines.append("PASS" if all(r.ok for r in results) else "FAIL")
    return "\n".join(lines)
