"""Exponent-vector monomials, graded enumeration and dense ranking.

Within a fixed degree monomials are ordered graded-lexicographically with
x1 largest: for n=2, d=2 the order is x1^2, x1*x2, x2^2.  The same order
indexes the columns of every slice matrix, so it must never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .combinatorics import binomial


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "Monomial":
        """x_i^power, with i counted from 1."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ValueError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exponents, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "*".join(parts) if parts else "1"


def count_degree(n: int, d: int) -> int:
    """Number of monomials of degree d in n variables."""
    if d < 0:
        return 0
    return binomial(d + n - 1, n - 1)


def _compositions(n: int, d: int) -> Iterator[tuple]:
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _compositions(n - 1, d - a):
            yield (a,) + rest


@lru_cache(maxsize=None)
def degree_exponents(n: int, d: int) -> tuple:
    """Exponent tuples of degree d in canonical order (cached)."""
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0:
        return ()
    return tuple(_compositions(n, d))


def enumerate_degree(n: int, d: int) -> list:
    return [Monomial(e) for e in degree_exponents(n, d)]


def rank_in_degree(m: Monomial | tuple) -> int:
    exps = m.exponents if isinstance(m, Monomial) else tuple(m)
    n = len(exps)
    remaining = sum(exps)
    rank = 0
    for i, a in enumerate(exps[:-1]):
        tail_vars = n - i - 1
        # completions whose i-th exponent exceeds a come first
        for t in range(a + 1, remaining + 1):
            rank += count_degree(tail_vars, remaining - t)
        remaining -= a
    return rank


def unrank_in_degree(n: int, d: int, k: int) -> Monomial:
    total = count_degree(n, d)
    if not 0 <= k < total:
        raise IndexError(f"rank {k} out of range for n={n}, d={d} ({total} monomials)")
    exps = []
    remaining = d
    for i in range(n - 1):
        tail_vars = n - i - 1
        for a in range(remaining, -1, -1):
            block = count_degree(tail_vars, remaining - a)
            if k < block:
                exps.append(a)
                remaining -= a
                break
            k -= block
    exps.append(remaining)
    return Monomial(tuple(exps))


@lru_cache(maxsize=None)
def degree_index(n: int, d: int) -> dict:
    """Map exponent tuple -> canonical rank for degree d."""
    return {e: k for k, e in enumerate(degree_exponents(n, d))}
