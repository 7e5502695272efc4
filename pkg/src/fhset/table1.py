"""Reproduce the in-scope rows of the AHC comparison table by brute force.

Each row picks the lexicographically smallest valid parameter tuple within
``max_q``, builds the set, and compares every computed column against the
published closed form evaluated at those parameters.

Instance domains (first tuple in lexicographic order is used):

=============  ============  ==========================================
row            tuple         constraints
=============  ============  ==========================================
kumar          (p,)          p odd prime
chung1 (nhz)   (k, N)        d = k, k | N, 2 <= k, 2k < N
chung2 (p2p)   (p,)          p odd prime
cyclotomic_a   (p, M)        p odd prime, M >= 2, M | p-1
cyclotomic_b   (q, M)        q odd prime power, M >= 2, M | q-1
theorem17      (N, k)        N odd >= 3, k >= 2, k | p1-1, (p1-1)/k >= 2
=============  ============  ==========================================

``d = k`` for the no-hit-zone row is the choice under which the table's
set size N/k coincides with the generator's floor(N/d).  The size checked
against ``max_q`` is p, kN, p, p, q and N respectively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .algebra import divisors, factorize, is_prime, prime_power, NotPrimePower
from .bounds import ahc_verdict, mhc_verdict
from .constructions import gen_cyclotomic_a, gen_cyclotomic_b, gen_kumar, gen_nhz, gen_p2p, gen_theorem17
from .core import FhsSet, distribution, full_report

COLUMNS = ("N", "|F|", "distribution", "L", "MHC", "A_a", "A_c", "AHC")
MATCH, MISMATCH, SKIPPED = "MATCH", "MISMATCH", "SKIPPED"

_MHC_LABEL = {"optimal": "optimal", "near_optimal": "near-optimal",
              "not_optimal": "not optimal", "undefined": "undefined"}
_AHC_LABEL = {"optimal": "optimal", "not_optimal": "not optimal", "undefined": "undefined"}


@dataclass
class Cell:
    column: str
    expected: object
    actual: object

    @property
    def status(self) -> str:
        return MATCH if self.expected == self.actual else MISMATCH


@dataclass
class RowResult:
    key: str
    reference: str
    params: Optional[dict]
    cells: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.params is None:
            return SKIPPED
        return MATCH if all(c.status == MATCH for c in self.cells) else MISMATCH


def _odd_primes(limit):
    return (p for p in range(3, limit + 1) if is_prime(p))


def _kumar_instances(limit):
    for p in _odd_primes(limit):
        yield {"p": p}


def _nhz_instances(limit):
    for k in range(2, limit + 1):
        for N in range(2 * k + 1, limit // k + 1):
            if N % k == 0:
                yield {"k": k, "N": N, "d": k}


def _cyclo_a_instances(limit):
    for p in _odd_primes(limit):
        for M in divisors(p - 1):
            if M >= 2:
                yield {"p": p, "M": M}


def _cyclo_b_instances(limit):
    for q in range(3, limit + 1, 2):
        try:
            prime_power(q)
        except NotPrimePower:
            continue
        for M in divisors(q - 1):
            if M >= 2:
                yield {"q": q, "M": M}


def _t17_instances(limit):
    for N in range(3, limit + 1, 2):
        p1 = min(factorize(N))
        for k in divisors(p1 - 1):
            if k >= 2 and (p1 - 1) // k >= 2:
                yield {"N": N, "k": k}


def _kumar_formula(p):
    return {"N": p * p, "|F|": p, "distribution": ("unbalanced", "UD"), "L": p,
            "MHC": "optimal", "A_a": Fraction(p), "A_c": Fraction(p * p - 1, p), "AHC": "optimal"}


def _nhz_formula(k, N, d):
    return {"N": k * N, "|F|": k * N, "distribution": ("PB", "PB"), "L": Fraction(N, k),
            "MHC": "not optimal", "A_a": Fraction(0), "A_c": Fraction(k), "AHC": "optimal"}


def _p2p_formula(p):
    return {"N": p * p - p, "|F|": p, "distribution": ("PB", "PB"), "L": p, "MHC": "optimal",
            "A_a": Fraction(p * (p - 1) * (p - 2), p * p - p - 1), "A_c": Fraction(p),
            "AHC": "optimal"}


def _cyclo_a_formula(p, M):
    f = (p - 1) // M
    return {"N": p, "|F|": M, "distribution": ("balanced", "UD"), "L": M, "MHC": "near-optimal",
            "A_a": Fraction(p - M + 1, M), "A_c": Fraction(M * f * f + 2 * f, p), "AHC": "optimal"}


def _cyclo_b_formula(q, M):
    f = (q - 1) // M
    return {"N": q - 1, "|F|": M, "distribution": ("PB", "PB"), "L": M, "MHC": "near-optimal",
            "A_a": Fraction((f - 1) * (q - 1), q - 2), "A_c": Fraction(f), "AHC": "optimal"}


def _t17_formula(N, k):
    p1 = min(factorize(N))
    return {"N": k * N, "|F|": N, "distribution": ("PB", "PB"), "L": Fraction(p1 - 1, k),
            "MHC": "optimal", "A_a": Fraction(k * (k - 1) * N, k * N - 1), "A_c": Fraction(k),
            "AHC": "optimal"}


@dataclass(frozen=True)
class RowSpec:
    key: str
    reference: str
    instances: Callable
    size: Callable
    build: Callable[..., FhsSet]
    formula: Callable[..., dict]


ROWS = (
    RowSpec("kumar", "Kumar p^2", _kumar_instances, lambda p: p, gen_kumar, _kumar_formula),
    RowSpec("chung1", "no-hit-zone", _nhz_instances, lambda k, N, d: k * N, gen_nhz, _nhz_formula),
    RowSpec("chung2", "Chung p^2-p", _kumar_instances, lambda p: p, gen_p2p, _p2p_formula),
    RowSpec("cyclotomic_a", "cyclotomic A", _cyclo_a_instances, lambda p, M: p,
            gen_cyclotomic_a, _cyclo_a_formula),
    RowSpec("cyclotomic_b", "cyclotomic B", _cyclo_b_instances, lambda q, M: q,
            gen_cyclotomic_b, _cyclo_b_formula),
    RowSpec("theorem17", "interleaved multiplicative", _t17_instances, lambda N, k: N,
            gen_theorem17, _t17_formula),
)


def measured_columns(fset: FhsSet) -> dict:
    N, M, L = fset.shape
    rep = full_report(fset)
    return {
        "N": N, "|F|": M, "distribution": distribution(fset).summary(), "L": L,
        "MHC": _MHC_LABEL[mhc_verdict(rep, N, M, L).verdict],
        "A_a": rep.A_a, "A_c": rep.A_c,
        "AHC": _AHC_LABEL[ahc_verdict(rep, N, M, L).verdict],
    }


def evaluate_row(row: RowSpec, params: dict) -> RowResult:
    expected = row.formula(**params)
    actual = measured_columns(row.build(**params))
    cells = [Cell(c, expected[c], actual[c]) for c in COLUMNS]
    return RowResult(row.key, row.reference, dict(params), cells)


def smallest_instance(row: RowSpec, max_q: int) -> Optional[dict]:
    for params in row.instances(max_q):
        if row.size(**params) <= max_q:
            return params
    return None


def table1(max_q: int = 256, instances: Optional[dict] = None) -> list[RowResult]:
    """Evaluate every in-scope row; ``instances`` overrides the parameters of chosen rows."""
    instances = instances or {}
    out = []
    for row in ROWS:
        params = instances.get(row.key) or smallest_instance(row, max_q)
        out.append(RowResult(row.key, row.reference, None) if params is None
                   else evaluate_row(row, params))
    return out


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, tuple):
        return ";".join(v)
    return str(v)


def render(results: list[RowResult]) -> str:
    lines = []
    for r in results:
        if r.params is None:
            lines.append(f"{r.key:<13} {SKIPPED}")
            continue
        args = ", ".join(f"{k}={v}" for k, v in r.params.items())
        lines.append(f"{r.key:<13} ({args})  {r.status}")
        for c in r.cells:
            lines.append(f"    {c.column:<13} formula={_fmt(c.expected):<16} "
                         f"computed={_fmt(c.actual):<16} {c.status}")
    bad = sum(c.status == MISMATCH for r in results for c in r.cells)
    lines.append("ALL MATCH" if bad == 0 else f"{bad} MISMATCH cell(s)")
    return "\n".join(lines)


def to_json_rows(results: list[RowResult]) -> list[dict]:
    return [{"row": r.key, "reference": r.reference, "params": r.params, "status": r.status,
             "cells": [{"column": c.column, "formula": _fmt(c.expected), "computed": _fmt(c.actual),
                        "status": c.status} for c in r.cells]}
            for r in results]
