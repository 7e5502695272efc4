"""Finite field arithmetic over GF(p) and GF(p^n) backed by log/antilog tables.

Elements of GF(p^n) are packed into integers in ``[0, q)``: the polynomial
``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` is stored as ``sum(c_k * p**k)``.
For ``n == 1`` this is just the residue mod p.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

TABLE_LIMIT = 1 << 20


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class TooLarge(FieldError):
    pass


class NotPrimePower(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**n``; raises NotPrimePower otherwise."""
    fs = factorize(q) if q >= 2 else {}
    if len(fs) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, n),) = fs.items()
    return p, n


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


# -- polynomials over GF(p), coefficient tuples low degree first -------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``b`` (``b`` nonzero) over GF(p)."""
    r = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        for k, bk in enumerate(b):
            r[shift + k] = (r[shift + k] - c * bk) % p
        _poly_trim(r)
    return r


def monic_polys(p: int, degree: int):
    """All monic polynomials of a given degree, low coefficients varying."""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(poly) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not poly_mod(poly, g, p):
                return False
    return True


# -- field context ------------------------------------------------------------

def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FieldContext:
    """GF(p^n) with a fixed primitive element and dense log tables.

    ``exp[l]`` is ``alpha**l`` for ``0 <= l < q-1``; ``dlog[x]`` is the
    discrete log of nonzero ``x`` and ``-1`` at ``x == 0``.
    """

    p: int
    n: int
    modulus: Optional[tuple[int, ...]]
    alpha: int
    exp: np.ndarray = field(repr=False)
    dlog: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return self.q - 1

    def elements(self) -> range:
        return range(self.q)

    def _check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element of GF({self.q})")
        return x

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n):
            x, c = divmod(x, self.p)
            out.append(c)
        return out

    def pack(self, coeffs: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**k for k, c in enumerate(coeffs))

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.n == 1:
            return (x + y) % self.p
        return self.pack([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        self._check(x)
        if self.n == 1:
            return -x % self.p
        return self.pack([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(int(self.dlog[x]) + int(self.dlog[y])) % self.order])

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return int(self.exp[-int(self.dlog[x]) % self.order])

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if x == 0:
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 1 if e == 0 else 0
        return int(self.exp[int(self.dlog[x]) * e % self.order])

    def log(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise DivisionByZero("log of 0")
        return int(self.dlog[x])

    def add_one(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized ``x + 1``; only the constant coefficient changes."""
        xs = np.asarray(xs, dtype=np.int64)
        low = xs % self.p
        return xs - low + (low + 1) % self.p

    @property
    def minus_one(self) -> int:
        return self.p - 1


def field_op(ctx: FieldContext, op: str, *operands: int) -> int:
    """Dispatch ``add``/``sub``/``mul``/``inv``/``neg``/``pow`` by name."""
    ops = {"add": ctx.add, "sub": ctx.sub, "mul": ctx.mul,
           "inv": ctx.inv, "neg": ctx.neg, "pow": ctx.pow}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(*operands)


def _check_size(q: int) -> None:
    if q - 1 > TABLE_LIMIT:
        raise TooLarge(f"q - 1 = {q - 1} exceeds table limit {TABLE_LIMIT}")


def _tables(exp: list[int], q: int) -> tuple[np.ndarray, np.ndarray]:
    exp_a = np.array(exp, dtype=np.int64)
    dlog = np.full(q, -1, dtype=np.int64)
    dlog[exp_a] = np.arange(len(exp), dtype=np.int64)
    return _readonly(exp_a), _readonly(dlog)


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    primes = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def build_prime_field(p: int) -> FieldContext:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    _check_size(p)
    g = smallest_primitive_root(p)
    exp, x = [], 1
    for _ in range(p - 1):
        exp.append(x)
        x = x * g % p
    exp_a, dlog = _tables(exp, p)
    return FieldContext(p=p, n=1, modulus=None, alpha=g, exp=exp_a, dlog=dlog)


def _powers_of_x(modulus: tuple[int, ...], p: int) -> Optional[list[int]]:
    """Packed powers x^0..x^(q-2) if x is primitive mod ``modulus``, else None."""
    n = len(modulus) - 1
    q = p**n
    weights = [p**k for k in range(n)]
    cur = [1] + [0] * (n - 1)
    exp = []
    for step in range(q - 1):
        packed = sum(c * w for c, w in zip(cur, weights))
        if step > 0 and packed == 1:
            return None
        exp.append(packed)
        # multiply by x and reduce with the monic modulus
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * m) % p for c, m in zip(cur, modulus[:-1])]
    # x^(q-1) must come back to 1
    if cur != [1] + [0] * (n - 1):
        return None
    return exp


def build_extension_field(p: int, n: int) -> FieldContext:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 2:
        raise FieldError("extension degree must be >= 2; use build_prime_field")
    _check_size(p**n)
    for poly in monic_polys(p, n):
        if poly[0] == 0 or not is_irreducible(poly, p):
            continue
        exp = _powers_of_x(poly, p)
        if exp is None:
            continue
        exp_a, dlog = _tables(exp, p**n)
        return FieldContext(p=p, n=n, modulus=poly, alpha=p, exp=exp_a, dlog=dlog)
    raise AssertionError(f"no primitive polynomial of degree {n} over GF({p})")


def build_field(q: int) -> FieldContext:
    """GF(q) for any prime power ``q`` with the canonical primitive element."""
    p, n = prime_power(q)
    return build_prime_field(p) if n == 1 else build_extension_field(p, n)
