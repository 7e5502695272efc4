"""Cyclotomic classes and cyclotomic numbers of a finite field."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import FieldContext


class NotDivisor(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CyclotomicScheme:
    """Order-``M`` cyclotomy of GF(q).

    ``class_of[x]`` is the class index of nonzero ``x`` (``-1`` for 0) and
    ``numbers[i, j]`` (built on first use) is the cyclotomic number ``|(C_i + 1) & C_j|``.
    """

    ctx: FieldContext
    M: int
    f: int
    class_of: np.ndarray = field(repr=False)

    def consecutive_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Class indices of (x, x + 1) over all x with x, x + 1 both nonzero."""
        x = np.arange(1, self.ctx.q, dtype=np.int64)
        y = self.ctx.add_one(x)
        hit = y != 0  # x = -1 maps to 0, which lies in no class
        return self.class_of[x[hit]], self.class_of[y[hit]]

    @cached_property
    def numbers(self) -> np.ndarray:
        M = self.M
        a, b = self.consecutive_pairs()
        table = np.bincount(a * M + b, minlength=M * M).reshape(M, M)
        table.flags.writeable = False
        return table

    def number(self, i: int, j: int) -> int:
        """Cyclotomic number with indices taken mod M."""
        return int(self.numbers[i % self.M, j % self.M])

    def cls(self, r: int) -> np.ndarray:
        """Elements of C_r in exponent order ``alpha^(M*l + r)``."""
        r %= self.M
        return self.ctx.exp[r::self.M].copy()


def build_scheme(ctx: FieldContext, M: int) -> CyclotomicScheme:
    q = ctx.q
    if M < 2 or (q - 1) % M:
        raise NotDivisor(f"M={M} must be >= 2 and divide q-1={q - 1}")
    class_of = np.where(ctx.dlog >= 0, ctx.dlog % M, -1)
    class_of.flags.writeable = False
    return CyclotomicScheme(ctx=ctx, M=M, f=(q - 1) // M, class_of=class_of)


def class_sums(scheme: CyclotomicScheme) -> list[int]:
    """sum_i (i+j, i)_M for every j in Z_M."""
    a, b = scheme.consecutive_pairs()
    # each pair counts toward cell (a, b), which lies on the wrapped diagonal j = a - b
    sums = np.bincount((a - b) % scheme.M, minlength=scheme.M)
    return [int(v) for v in sums]


def class_sum_identity(scheme: CyclotomicScheme) -> list[bool]:
    """For each j, whether sum_i (i+j, i)_M is f-1 (j = 0) or f (otherwise)."""
    f = scheme.f
    return [total == (f - 1 if j == 0 else f) for j, total in enumerate(class_sums(scheme))]


def doubling_numbers_vanish(scheme: CyclotomicScheme) -> bool:
    """True iff (2l, l)_M = 0 for every l in Z_M.

    This is the sufficient condition under which the discrete-log set of
    length q-1 is certified near-optimal against the Peng-Fan bound.
    """
    return all(scheme.number(2 * l, l) == 0 for l in range(scheme.M))
