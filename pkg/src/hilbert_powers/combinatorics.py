"""Exact binomials and the alternating binomial basis for Hilbert coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


def binomial(a: int, b: int) -> int:
    """C(a, b) with the vanishing convention: 0 when b > a, b < 0 or a < 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def lattice_point_count(n: int, j: int) -> int:
    """Number of vectors in N^n whose coordinates sum to j."""
    if n <= 0:
        return 1 if j == 0 else 0
    return binomial(n + j - 1, n - 1)


@dataclass(frozen=True)
class BinomialBasisPolynomial:
    """Integer-valued polynomial in s written as

        sum_i (-1)^i e_i C(s + n - i - 1, n - i),   i = 0..n

    The e_i are the Hilbert coefficients when the polynomial is the
    eventual length of S_n / I^s.
    """

    n: int
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} coefficients for n={self.n}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    def __call__(self, s: int) -> int:
        return evaluate_basis(self, s)


def basis_value(n: int, i: int, s: int) -> int:
    """Signed basis element (-1)^i C(s + n - i - 1, n - i)."""
    sign = -1 if i % 2 else 1
    return sign * binomial(s + n - i - 1, n - i)


def evaluate_basis(poly: BinomialBasisPolynomial, s: int) -> int:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    n = poly.n
    return sum(e * basis_value(n, i, s) for i, e in enumerate(poly.coefficients))


def evaluate_coefficients(e: Sequence[int], s: int) -> int:
    """Shorthand for evaluating a bare tuple (e_0, ..., e_n)."""
    return evaluate_basis(BinomialBasisPolynomial(len(e) - 1, tuple(e)), s)
