"""Naive counters kept deliberately independent of the engines."""

from __future__ import annotations

from itertools import combinations_with_replacement, product


def brute_force_dims(n: int, generators, s: int, top: int) -> list:
    """h_0..h_top of S_n / I^s by testing every monomial against every s-fold product.

    ``generators`` are exponent tuples; the product set is not reduced.
    """
    gens = [tuple(g) for g in generators]
    prods = [tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(gens, s)]
    dims = [0] * (top + 1)
    for e in product(range(top + 1), repeat=n):
        d = sum(e)
        if d > top:
            continue
        if not any(all(a <= b for a, b in zip(g, e)) for g in prods):
            dims[d] += 1
    return dims


def lattice_points(n: int, j: int) -> int:
    """Count vectors of N^n with coordinate sum j by enumeration."""
    return sum(1 for e in product(range(j + 1), repeat=n) if sum(e) == j)
