"""Generators for the FHS families, and the interleaving transform.

Every generator returns an :class:`~fhset.core.FhsSet` whose ``provenance``
records the construction name and its parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import build_field, build_prime_field, factorize, is_prime, prime_power, FieldError
from .core import FhsSet, ShapeMismatch
from .cyclotomy import build_scheme


class InvalidParam(ValueError):
    pass


class NotBijective(ValueError):
    pass


def _odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidParam(f"p={p} must be an odd prime")


def _prov(name: str, **params) -> dict:
    return {"construction": name, "params": params}


# -- interleaving -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class InterleaveMap:
    """Target coordinate (j, s) reads source coordinate (src_seq[j, s], src_pos[j, s])."""

    source_shape: tuple[int, int]  # (N, L)
    target_shape: tuple[int, int]  # (N', L')
    src_seq: np.ndarray = field(repr=False)
    src_pos: np.ndarray = field(repr=False)

    def __post_init__(self):
        (n, l), (n2, l2) = self.source_shape, self.target_shape
        if n * l != n2 * l2:
            raise ShapeMismatch(f"N L = {n * l} but N' L' = {n2 * l2}")
        for a in (self.src_seq, self.src_pos):
            if a.shape != (l2, n2):
                raise ShapeMismatch(f"map arrays must have shape {(l2, n2)}")

    def is_bijective(self) -> bool:
        n, l = self.source_shape
        if self.src_seq.min() < 0 or self.src_seq.max() >= l:
            return False
        if self.src_pos.min() < 0 or self.src_pos.max() >= n:
            return False
        flat = (self.src_seq * n + self.src_pos).ravel()
        return np.unique(flat).size == n * l

    @classmethod
    def identity(cls, N: int, L: int) -> "InterleaveMap":
        seq, pos = np.indices((L, N))
        return cls((N, L), (N, L), seq, pos)

    @classmethod
    def construction_c(cls, N: int, L: int, k: int) -> "InterleaveMap":
        """Y_i(k t1 + t0) = X_{k i + t0}(t1) for 0 <= i < L/k."""
        if k < 1 or L % k:
            raise InvalidParam(f"k={k} must be a positive divisor of L={L}")
        i, s = np.indices((L // k, k * N))
        t1, t0 = np.divmod(s, k)
        return cls((N, L), (k * N, L // k), k * i + t0, t1)

    @classmethod
    def random(cls, rng: np.random.Generator, N: int, L: int, N2: int) -> "InterleaveMap":
        """A uniformly random bijection onto an (N2, N L / N2) target."""
        if (N * L) % N2:
            raise ShapeMismatch(f"N2={N2} does not divide N L={N * L}")
        perm = rng.permutation(N * L).reshape(N * L // N2, N2)
        seq, pos = np.divmod(perm, N)
        return cls((N, L), (N2, N * L // N2), seq, pos)


def interleave(fset: FhsSet, imap: InterleaveMap, provenance: Optional[dict] = None) -> FhsSet:
    if imap.source_shape != (fset.N, fset.L):
        raise ShapeMismatch(f"map expects (N, L)={imap.source_shape}, set is {(fset.N, fset.L)}")
    if not imap.is_bijective():
        raise NotBijective("interleave map does not hit every source coordinate exactly once")
    symbols = fset.symbols[imap.src_seq, imap.src_pos]
    prov = provenance if provenance is not None else {
        "construction": "generic_interleave",
        "params": {"target_shape": list(imap.target_shape)},
        "source": fset.provenance,
    }
    return FhsSet(symbols, fset.M, fset.labels, prov)


def construction_c(fset: FhsSet, k: int) -> FhsSet:
    imap = InterleaveMap.construction_c(fset.N, fset.L, k)
    prov = {"construction": "construction_c", "params": {"k": k}, "source": fset.provenance}
    return interleave(fset, imap, prov)


# -- uniformly distributed / perfectly balanced examples ---------------------

def gen_kumar(p: int) -> FhsSet:
    """(p^2, p, p) set X_i(t) = <p t0 t1 + p i>_{p^2} over p Z_p.

    Symbol id k stands for the alphabet element p*k.
    """
    _odd_prime(p)
    t0, t1 = np.divmod(np.arange(p * p), p)
    i = np.arange(p)[:, None]
    ids = (t0 * t1 + i) % p
    labels = tuple(str(p * k) for k in range(p))
    return FhsSet(ids, p, labels, _prov("kumar", p=p))


def gen_nhz(k: int, N: int, d: int) -> FhsSet:
    """No-hit-zone (kN, kN, L) set over Z_k x Z_N with L = floor(N / d).

    Pair (a, b) is stored as id a*N + b; second coordinates reduce mod N.
    """
    if N < 3 or not 2 <= k < N or not (1 <= d and 2 * d < N):
        raise InvalidParam(f"need N >= 3, 2 <= k < N, 1 <= d < N/2; got k={k}, N={N}, d={d}")
    L, r = divmod(N, d)
    t1, t0 = np.divmod(np.arange(k * N), k)
    i = np.arange(L)[:, None]
    low = t0 <= k // 2
    second = np.where(low, t1 + i * d, t1 + (L - 1 - i) * d) % N
    ids = t0 * N + second
    labels = tuple(f"({a},{b})" for a in range(k) for b in range(N))
    prov = _prov("nhz", k=k, N=N, d=d, L=L, r=r)
    if L * k != N:
        prov["note"] = f"set size floor(N/d) = {L} differs from N/k = {N}/{k}"
    return FhsSet(ids, k * N, labels, prov)


def gen_p2p(p: int) -> FhsSet:
    """(p^2 - p, p, p) set X_i(t) = <(t0 + 1) t1 + i>_p, t0 = <t>_{p-1}, t1 = <t>_p."""
    _odd_prime(p)
    t = np.arange(p * p - p)
    t0, t1 = t % (p - 1), t % p
    i = np.arange(p)[:, None]
    return FhsSet(((t0 + 1) * t1 + i) % p, p, None, _prov("p2p", p=p))


# -- cyclotomic constructions ------------------------------------------------

def gen_cyclotomic_a(p: int, M: int) -> FhsSet:
    """(p, M, M) set: X_i(0) = i and X_i(t) = <r + i>_M for t in C_r."""
    _odd_prime(p)
    if M < 2 or (p - 1) % M:
        raise InvalidParam(f"M={M} must be >= 2 and divide p-1={p - 1}")
    scheme = build_scheme(build_prime_field(p), M)
    r = scheme.class_of.copy()  # class_of[t] for t in F_p
    i = np.arange(M)[:, None]
    ids = (r[None, :] + i) % M
    ids[:, 0] = np.arange(M)
    return FhsSet(ids, M, None, _prov("cyclotomic_a", p=p, M=M, f=(p - 1) // M))


def gen_cyclotomic_b(q: int, M: int) -> FhsSet:
    """(q - 1, M, M) set: X_i(t) = <r + i>_M when alpha^t + 1 is in C_r.

    At the single t with alpha^t + 1 = 0, X_i(t) = i.  That t is (q-1)/2 for
    odd q and 0 in characteristic 2.
    """
    try:
        p, n = prime_power(q)
        ctx = build_field(q)
    except FieldError as exc:
        raise InvalidParam(str(exc)) from None
    if M < 2 or (q - 1) % M:
        raise InvalidParam(f"M={M} must be >= 2 and divide q-1={q - 1}")
    scheme = build_scheme(ctx, M)
    shifted = ctx.add_one(ctx.exp)
    r = scheme.class_of[shifted]
    special = np.flatnonzero(shifted == 0)
    i = np.arange(M)[:, None]
    ids = (r[None, :] + i) % M
    ids[:, special] = i
    prov = _prov("cyclotomic_b", q=q, p=p, n=n, M=M, f=(q - 1) // M)
    prov["zero_position"] = int(special[0])
    if p == 2:
        prov["note"] = "characteristic 2: alpha^0 + 1 = 0"
    return FhsSet(ids, M, None, prov)


def gen_corollary16(p: int, M: int) -> FhsSet:
    """Pairwise interleaving (k = 2) of the order-M cyclotomic set of length p; f must be odd."""
    _odd_prime(p)
    if M < 2 or (p - 1) % M or M % 2 or ((p - 1) // M) % 2 == 0:
        raise InvalidParam(f"need p = M f + 1 with M even and f odd; got p={p}, M={M}")
    out = construction_c(gen_cyclotomic_a(p, M), 2)
    return FhsSet(out.symbols, out.M, None, {
        "construction": "corollary16", "params": {"p": p, "M": M}, "source": out.provenance})


# -- multiplicative sets ------------------------------------------------------

def _odd_modulus(N: int) -> int:
    """Smallest prime factor of odd N >= 3."""
    if N < 3 or N % 2 == 0:
        raise InvalidParam(f"N={N} must be odd and >= 3")
    return min(factorize(N))


def gen_multiplicative(N: int) -> FhsSet:
    """(N, N, p1 - 1) set X_i(t) = <(i + 1) t>_N, p1 the smallest prime factor of N."""
    p1 = _odd_modulus(N)
    t = np.arange(N)
    i = np.arange(p1 - 1)[:, None]
    return FhsSet((i + 1) * t % N, N, None, _prov("multiplicative", N=N, p1=p1))


def gen_theorem17(N: int, k: int) -> FhsSet:
    """(kN, N, (p1 - 1)/k) set: the multiplicative set interleaved k at a time."""
    p1 = _odd_modulus(N)
    if k < 1 or (p1 - 1) % k:
        raise InvalidParam(f"k={k} must be a positive divisor of p1-1={p1 - 1}")
    out = construction_c(gen_multiplicative(N), k)
    return FhsSet(out.symbols, out.M, None, {
        "construction": "theorem17", "params": {"N": N, "k": k, "p1": p1}, "source": out.provenance})


GENERATORS = {
    "kumar": (gen_kumar, ("p",)),
    "nhz": (gen_nhz, ("k", "N", "d")),
    "p2p": (gen_p2p, ("p",)),
    "cyclotomic_a": (gen_cyclotomic_a, ("p", "M")),
    "cyclotomic_b": (gen_cyclotomic_b, ("q", "M")),
    "corollary16": (gen_corollary16, ("p", "M")),
    "multiplicative": (gen_multiplicative, ("N",)),
    "theorem17": (gen_theorem17, ("N", "k")),
}


def generate(name: str, **params) -> FhsSet:
    """Build a set by registry name; dashes in ``name`` are accepted."""
    key = name.replace("-", "_")
    if key not in GENERATORS:
        raise InvalidParam(f"unknown construction {name!r}; choose from {sorted(GENERATORS)}")
    fn, names = GENERATORS[key]
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise InvalidParam(f"{key} needs parameters {list(names)}; missing {missing}")
    return fn(*(int(params[n]) for n in names))
