"""Sequence data model and the exact Hamming correlation engine.

All correlation values are integer counts; averages are ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

MAX_LENGTH = 1 << 16
MAX_SEQUENCES = 1 << 8
_CHUNK = 1 << 22


class ShapeMismatch(ValueError):
    pass


class DegenerateSet(ValueError):
    pass


def _as_symbols(symbols, alphabet_size: int) -> np.ndarray:
    arr = np.array(symbols, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= alphabet_size):
        raise ValueError(f"symbol ids must lie in [0, {alphabet_size})")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Fhs:
    """One hopping pattern: ``N`` symbol ids over an alphabet of ``M``."""

    symbols: np.ndarray
    alphabet_size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        arr = _as_symbols(self.symbols, self.alphabet_size)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("an FHS needs at least one symbol")
        object.__setattr__(self, "symbols", arr)

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other):
        if not isinstance(other, Fhs):
            return NotImplemented
        return (self.alphabet_size == other.alphabet_size
                and np.array_equal(self.symbols, other.symbols))

    def counts(self) -> np.ndarray:
        """N_X(a) for every symbol a."""
        return np.bincount(self.symbols, minlength=self.alphabet_size)

    def labelled(self) -> list[str]:
        if self.labels is None:
            return [str(s) for s in self.symbols]
        return [self.labels[s] for s in self.symbols]


@dataclass(frozen=True, eq=False)
class FhsSet:
    """``L`` sequences of common length ``N`` over a common alphabet.

    ``symbols`` is an ``(L, N)`` integer array.
    """

    symbols: np.ndarray
    alphabet_size: int
    labels: Optional[tuple[str, ...]] = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = _as_symbols(self.symbols, self.alphabet_size)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeMismatch("an FHS set needs L >= 1 rows of length N >= 1")
        if arr.shape[1] > MAX_LENGTH or arr.shape[0] > MAX_SEQUENCES:
            raise ShapeMismatch(f"shape {arr.shape} exceeds limits L <= {MAX_SEQUENCES}, N <= {MAX_LENGTH}")
        object.__setattr__(self, "symbols", arr)

    @classmethod
    def from_sequences(cls, seqs: Sequence[Fhs], provenance: Optional[dict] = None) -> "FhsSet":
        if not seqs:
            raise ShapeMismatch("empty sequence list")
        M, N = seqs[0].alphabet_size, len(seqs[0])
        for s in seqs:
            if s.alphabet_size != M or len(s) != N:
                raise ShapeMismatch("all sequences must share N and M")
        return cls(np.stack([s.symbols for s in seqs]), M, seqs[0].labels, dict(provenance or {}))

    @property
    def N(self) -> int:
        return int(self.symbols.shape[1])

    @property
    def L(self) -> int:
        return int(self.symbols.shape[0])

    @property
    def M(self) -> int:
        return self.alphabet_size

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.N, self.M, self.L

    def __len__(self) -> int:
        return self.L

    def __getitem__(self, i: int) -> Fhs:
        return Fhs(self.symbols[i], self.alphabet_size, self.labels)

    def __iter__(self):
        return (self[i] for i in range(self.L))

    def __eq__(self, other):
        if not isinstance(other, FhsSet):
            return NotImplemented
        return (self.alphabet_size == other.alphabet_size
                and np.array_equal(self.symbols, other.symbols))

    def counts(self) -> np.ndarray:
        """``(L, M)`` table of N_{X_i}(a)."""
        rows = self.symbols + self.M * np.arange(self.L)[:, None]
        return np.bincount(rows.ravel(), minlength=self.L * self.M).reshape(self.L, self.M)

    def relabel(self, perm: Sequence[int]) -> "FhsSet":
        """Apply a permutation of the alphabet to every symbol."""
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.M)):
            raise ValueError("not a permutation of the alphabet")
        return FhsSet(perm[self.symbols], self.M, None, dict(self.provenance))


def hamming_correlation(x: Fhs, y: Fhs, tau: int) -> int:
    """H_{X,Y}(tau): hits between X(t) and Y(t + tau mod N)."""
    if len(x) != len(y) or x.alphabet_size != y.alphabet_size:
        raise ShapeMismatch("sequences differ in length or alphabet")
    n = len(x)
    if not 0 <= tau < n:
        raise ValueError(f"shift {tau} outside [0, {n})")
    return int(np.count_nonzero(x.symbols == np.roll(y.symbols, -tau)))


def correlation_profiles(fset: FhsSet) -> np.ndarray:
    """``(L, L, N)`` array of H_{X_i,X_j}(tau).

    Each hit is an (i, t, j, s) with X_i(t) == X_j(s); it lands at
    tau = s - t mod N.  Grouping positions by symbol enumerates exactly the
    hits, so the work is sum_a N_set(a)^2 rather than L^2 N^2.
    """
    L, N, M = fset.L, fset.N, fset.M
    flat = fset.symbols.ravel()
    order = np.argsort(flat, kind="stable")
    bounds = np.searchsorted(flat[order], np.arange(M + 1))
    seq_idx, pos = np.divmod(order, N)
    size = L * L * N
    out = np.zeros(size, dtype=np.int64)
    pending, held = [], 0

    def flush():
        nonlocal held
        if pending:
            out[:] += np.bincount(np.concatenate(pending), minlength=size)
            pending.clear()
            held = 0

    for a in range(M):
        lo, hi = bounds[a], bounds[a + 1]
        if lo == hi:
            continue
        si, ti = seq_idx[lo:hi], pos[lo:hi]
        step = max(1, _CHUNK // (hi - lo))
        for c in range(0, hi - lo, step):
            # rows: (i, t); cols: (j, s)
            rs, rt = si[c:c + step], ti[c:c + step]
            keys = (rs[:, None] * L + si[None, :]) * N + (ti[None, :] - rt[:, None]) % N
            pending.append(keys.ravel())
            held += keys.size
            # small symbol groups are batched so each bincount pays for its
            # size-long output only once per _CHUNK keys
            if held >= _CHUNK:
                flush()
    flush()
    return out.reshape(L, L, N)


@dataclass(frozen=True, eq=False)
class CorrelationReport:
    """Hamming correlation statistics of one set.

    Fields that are undefined for the shape (out-of-phase statistics when
    N = 1, cross statistics when L = 1) are ``None``.
    """

    N: int
    M: int
    L: int
    profiles: np.ndarray = field(repr=False)
    auto_max: tuple[Optional[int], ...] = ()
    H_a: Optional[int] = None
    H_c: Optional[int] = None
    H: Optional[int] = None
    S_a: Optional[int] = None
    S_c: Optional[int] = None
    A_a: Optional[Fraction] = None
    A_c: Optional[Fraction] = None

    def require(self, name: str):
        value = getattr(self, name)
        if value is None:
            raise DegenerateSet(f"{name} is undefined for an (N={self.N}, L={self.L}) set")
        return value

    def pair_max(self, i: int, j: int) -> int:
        """H(X_i, X_j) over all shifts for i != j."""
        return int(self.profiles[i, j].max())


def full_report(fset: FhsSet, profiles: Optional[np.ndarray] = None) -> CorrelationReport:
    L, N, M = fset.L, fset.N, fset.M
    prof = correlation_profiles(fset) if profiles is None else profiles
    diag = prof[np.arange(L), np.arange(L)]  # (L, N) autocorrelation rows

    auto_max: tuple[Optional[int], ...] = tuple([None] * L)
    H_a = S_a = A_a = None
    if N >= 2:
        auto_max = tuple(int(v) for v in diag[:, 1:].max(axis=1))
        H_a = max(auto_max)
        S_a = sum(int(v) for v in diag[:, 1:].sum(axis=1))
        A_a = Fraction(S_a, L * (N - 1))

    H_c = S_c = A_c = None
    if L >= 2:
        off = ~np.eye(L, dtype=bool)
        H_c = int(prof[off].max())
        # ordered pairs; row sums stay well inside int64
        S_c = sum(int(v) for v in prof[off].sum(axis=1))
        A_c = Fraction(S_c, L * (L - 1) * N)

    present = [v for v in (H_a, H_c) if v is not None]
    H = max(present) if present else None
    return CorrelationReport(N=N, M=M, L=L, profiles=prof, auto_max=auto_max,
                             H_a=H_a, H_c=H_c, H=H, S_a=S_a, S_c=S_c, A_a=A_a, A_c=A_c)


@dataclass(frozen=True)
class DistributionVerdict:
    sequence_counts: tuple[tuple[int, ...], ...]
    set_counts: tuple[int, ...]
    balanced: tuple[bool, ...]
    perfectly_balanced: tuple[bool, ...]
    uniformly_distributed: bool

    @property
    def all_balanced(self) -> bool:
        return all(self.balanced)

    @property
    def all_perfectly_balanced(self) -> bool:
        return all(self.perfectly_balanced)

    def summary(self) -> tuple[str, str]:
        """Short labels (sequence level, set level): PB / balanced / unbalanced; PB / UD / not UD."""
        if self.all_perfectly_balanced:
            seq = "PB"
        elif self.all_balanced:
            seq = "balanced"
        else:
            seq = "unbalanced"
        if self.all_perfectly_balanced:
            whole = "PB"
        elif self.uniformly_distributed:
            whole = "UD"
        else:
            whole = "not UD"
        return seq, whole


def distribution(fset: FhsSet) -> DistributionVerdict:
    counts = fset.counts()
    total = counts.sum(axis=0)
    spread = counts.max(axis=1) - counts.min(axis=1)
    return DistributionVerdict(
        sequence_counts=tuple(tuple(int(c) for c in row) for row in counts),
        set_counts=tuple(int(c) for c in total),
        balanced=tuple(bool(s <= 1) for s in spread),
        perfectly_balanced=tuple(bool(s == 0) for s in spread),
        uniformly_distributed=bool(total.max() == total.min()),
    )


def verify_sum_identities(fset: FhsSet, report: Optional[CorrelationReport] = None) -> bool:
    """Check both correlation-sum identities against the symbol counts.

    Per ordered pair: sum_tau H_{X,Y}(tau) == sum_a N_X(a) N_Y(a).
    Whole set: S_a + S_c == sum_a N_set(a) (N_set(a) - 1).
    """
    report = full_report(fset) if report is None else report
    counts = [[int(c) for c in row] for row in fset.counts()]
    sums = report.profiles.sum(axis=2)
    for i in range(fset.L):
        for j in range(fset.L):
            expect = sum(a * b for a, b in zip(counts[i], counts[j]))
            if int(sums[i, j]) != expect:
                return False
    totals = [sum(col) for col in zip(*counts)]
    lhs = (report.S_a or 0) + (report.S_c or 0)
    return lhs == sum(n * (n - 1) for n in totals)
