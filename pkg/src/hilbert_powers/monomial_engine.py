"""Hilbert series of S_n / I^s for quadratic monomial ideals containing all squares.

Standard monomials are counted degree by degree.  I^s is generated in
degree 2s, so below 2s every monomial is standard; in degree 2s the
standard monomials are those outside the generator set; above 2s a
monomial is standard iff every one of its divisors one degree lower is.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import binomial
from .errors import PreconditionError
from .monomials import Monomial, count_degree, degree_exponents


def _canonical_key(e: tuple):
    return (sum(e), tuple(-a for a in e))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = g if isinstance(g, Monomial) else Monomial(tuple(g))
            if g.n != self.n:
                raise ValueError(f"generator {g} does not live in {self.n} variables")
            gens.append(g.exponents)
        gens = sorted(set(minimalize(gens)), key=_canonical_key)
        object.__setattr__(self, "generators", tuple(Monomial(e) for e in gens))

    @property
    def exponent_set(self) -> frozenset:
        return frozenset(g.exponents for g in self.generators)

    def contains_all_squares(self) -> bool:
        gens = self.exponent_set
        return all(tuple(2 if j == i else 0 for j in range(self.n)) in gens
                   for i in range(self.n))

    def contains(self, m: Monomial | tuple) -> bool:
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return any(all(a <= b for a, b in zip(g, exps)) for g in self.exponent_set)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def minimalize(exponents) -> list:
    """Drop every exponent vector divisible by a different one in the list."""
    uniq = sorted(set(exponents), key=sum)
    kept: list = []
    lower: list = []  # kept vectors of strictly smaller degree than the current one
    deg = None
    for e in uniq:
        if sum(e) != deg:
            lower = list(kept)
            deg = sum(e)
        # distinct vectors of equal degree never divide each other
        if not any(all(a <= b for a, b in zip(k, e)) for k in lower):
            kept.append(e)
    return kept


def from_squarefree_set(n: int, pairs) -> MonomialIdeal:
    """I_{n,M}: all squares x_i^2 plus x_i*x_j for each pair {i, j} in M (1-based)."""
    gens = [Monomial.var(n, i, 2) for i in range(1, n + 1)]
    for pair in pairs:
        i, j = tuple(pair)
        if i == j:
            raise ValueError(f"pair {pair} is not squarefree")
        for v in (i, j):
            if not 1 <= v <= n:
                raise ValueError(f"variable index {v} out of range 1..{n}")
        gens.append(Monomial.var(n, i) * Monomial.var(n, j))
    return MonomialIdeal(n, tuple(gens))


def all_pairs(n: int) -> list:
    return list(combinations(range(1, n + 1), 2))


def _product_set(left, right) -> set:
    return {tuple(a + b for a, b in zip(u, v)) for u in left for v in right}


def power_generators(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    base = ideal.exponent_set
    current = set(base)
    for _ in range(s - 1):
        current = set(minimalize(_product_set(current, base)))
    return MonomialIdeal(ideal.n, tuple(current))


@dataclass(frozen=True)
class HilbertData:
    """Degree-wise dimensions h_0..h_top of an Artinian quotient S_n / I^s.

    Equality ignores trailing zero degrees, so a series computed up to the
    a-priori top degree compares equal to the same series written tightly.
    """

    n: int
    s: int
    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(h) for h in self.dims))

    @property
    def length(self) -> int:
        return sum(self.dims)

    @property
    def series(self) -> tuple:
        dims = list(self.dims)
        while dims and dims[-1] == 0:
            dims.pop()
        return tuple(dims)

    @property
    def top_degree(self) -> int:
        return len(self.series) - 1

    def __eq__(self, other):
        if not isinstance(other, HilbertData):
            return NotImplemented
        return (self.n, self.s, self.series) == (other.n, other.s, other.series)

    def __hash__(self):
        return hash((self.n, self.s, self.series))

    def interesting_part(self) -> list:
        return interesting_part(self)


def interesting_part(h: HilbertData) -> list:
    """Terms (degree, h_degree) with degree >= 2s and nonzero value."""
    return [(d, v) for d, v in enumerate(h.dims) if d >= 2 * h.s and v != 0]


def _is_maximal_square(ideal: MonomialIdeal) -> bool:
    return len(ideal.generators) == count_degree(ideal.n, 2) and all(
        g.degree == 2 for g in ideal.generators
    )


def hilbert_data(ideal: MonomialIdeal, s: int, fast_paths: bool = True) -> HilbertData:
    """Exact h_0..h_{2s+n-2} of S_n / I^s.

    ``fast_paths=False`` disables the closed-form shortcut for I = m^2 so the
    enumeration can be checked against it.
    """
    n = ideal.n
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if not ideal.contains_all_squares():
        raise PreconditionError(
            f"ideal {ideal} must contain every square x_i^2 (quotient not bounded in degree)"
        )
    if any(g.degree != 2 for g in ideal.generators):
        raise PreconditionError(f"ideal {ideal} is not generated in degree 2")
    top = 2 * s + n - 2
    dims = [count_degree(n, d) for d in range(2 * s)]

    if fast_paths and _is_maximal_square(ideal):
        # I^s = m^{2s}: nothing survives from degree 2s on
        return HilbertData(n, s, dims + [0] * (top - 2 * s + 1))

    gens = power_generators(ideal, s).exponent_set
    standard = {e for e in degree_exponents(n, 2 * s) if e not in gens}
    dims.append(len(standard))
    for _ in range(2 * s + 1, top + 1):
        standard = _next_standard(standard, n)
        dims.append(len(standard))
    return HilbertData(n, s, dims)


def _next_standard(standard: set, n: int) -> set:
    nxt = set()
    for u in standard:
        for j in range(n):
            v = u[:j] + (u[j] + 1,) + u[j + 1:]
            if v in nxt:
                continue
            if all(v[i] == 0 or (v[:i] + (v[i] - 1,) + v[i + 1:]) in standard
                   for i in range(n)):
                nxt.add(v)
    return nxt


def ci_length(n: int, s: int) -> int:
    """Length of S_n / (x_1^2, ..., x_n^2)^s: 2^n C(s+n-1, n)."""
    return 2 ** n * binomial(s + n - 1, n)
