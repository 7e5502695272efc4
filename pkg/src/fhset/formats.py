"""Plain-text sequence files and the JSON analysis report.

Sequence file::

    N M L
    x_0(0) x_0(1) ... x_0(N-1)
    ...
    x_{L-1}(0) ...          (L lines of N decimal symbol ids)

Rationals in the report are ``"num/den"`` strings, reduced, den > 0.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .bounds import ahc_verdict, lg_verdict, mhc_verdict
from .core import FhsSet, distribution, full_report

PathLike = Union[str, Path]


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: Optional[int] = None):
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


def format_sequences(fset: FhsSet) -> str:
    rows = [f"{fset.N} {fset.M} {fset.L}"]
    rows += [" ".join(str(int(v)) for v in row) for row in fset.symbols]
    return "\n".join(rows) + "\n"


def write_sequence_file(fset: FhsSet, path: PathLike) -> None:
    Path(path).write_text(format_sequences(fset))


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for m in re.finditer(r"\S+", line):
        tok = m.group()
        if not tok.isdigit():
            raise FormatError(f"expected a non-negative integer, got {tok!r}", lineno, m.start() + 1)
        out.append(int(tok))
    return out


def parse_sequences(text: str) -> FhsSet:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty file", 1)
    header = _ints(lines[0], 1)
    if len(header) != 3:
        raise FormatError("header must be 'N M L'", 1)
    N, M, L = header
    if N < 1 or M < 1 or L < 1:
        raise FormatError("N, M and L must all be positive", 1)
    if len(lines) - 1 != L:
        raise FormatError(f"expected {L} sequence lines, found {len(lines) - 1}", len(lines))
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        row = _ints(line, lineno)
        if len(row) != N:
            raise FormatError(f"expected {N} symbols, found {len(row)}", lineno)
        for col, v in enumerate(row, start=1):
            if v >= M:
                raise FormatError(f"symbol {v} outside alphabet of size {M}", lineno, col)
        rows.append(row)
    return FhsSet(np.array(rows, dtype=np.int64), M)


def read_sequence_file(path: PathLike) -> FhsSet:
    return parse_sequences(Path(path).read_text())


# -- analysis report ------------------------------------------------------------

def rational_str(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: Optional[str]) -> Optional[Fraction]:
    if s is None:
        return None
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


_RATIONAL_KEYS = ("A_a", "A_c")


@dataclass
class AnalysisReport:
    shape: dict
    provenance: dict
    distribution: dict
    correlation: dict
    bounds: dict
    timing: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        corr = dict(self.correlation)
        for k in _RATIONAL_KEYS:
            corr[k] = rational_str(corr.get(k))
        return {"shape": self.shape, "provenance": self.provenance,
                "distribution": self.distribution, "correlation": corr,
                "bounds": self.bounds, "timing": self.timing}

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        corr = dict(d["correlation"])
        for k in _RATIONAL_KEYS:
            corr[k] = parse_rational(corr.get(k))
        return cls(shape=d["shape"], provenance=d["provenance"], distribution=d["distribution"],
                   correlation=corr, bounds=d["bounds"], timing=d.get("timing", {}))

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def _verdict_dict(v) -> dict:
    return {"verdict": v.verdict, "witnesses": v.witnesses}


def analyze(fset: FhsSet) -> AnalysisReport:
    start = time.perf_counter()
    N, M, L = fset.shape
    rep = full_report(fset)
    dist = distribution(fset)
    seq_level, set_level = dist.summary()

    cross = None
    if L >= 2:
        cross = [[None if i == j else rep.pair_max(i, j) for j in range(L)] for i in range(L)]
    correlation = {
        "H_a": rep.H_a, "H_c": rep.H_c, "H": rep.H, "S_a": rep.S_a, "S_c": rep.S_c,
        "A_a": rep.A_a, "A_c": rep.A_c,
        "auto_max": list(rep.auto_max), "cross_max": cross,
    }
    bounds = {
        "peng_fan": _verdict_dict(mhc_verdict(rep, N, M, L)),
        "ahc": _verdict_dict(ahc_verdict(rep, N, M, L)),
        "lempel_greenberger": ([_verdict_dict(lg_verdict(h, N, M)) for h in rep.auto_max]
                               if N >= 2 else None),
    }
    dist_d = {
        "sequence_level": seq_level, "set_level": set_level,
        "balanced": list(dist.balanced), "perfectly_balanced": list(dist.perfectly_balanced),
        "uniformly_distributed": dist.uniformly_distributed,
        "sequence_counts": [list(r) for r in dist.sequence_counts],
        "set_counts": list(dist.set_counts),
    }
    prov = dict(fset.provenance)
    if fset.labels is not None:
        prov["labels"] = list(fset.labels)
    return AnalysisReport(
        shape={"N": N, "M": M, "L": L}, provenance=prov, distribution=dist_d,
        correlation=correlation, bounds=bounds,
        timing={"seconds": round(time.perf_counter() - start, 6)},
    )
