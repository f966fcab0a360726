from itertools import product

import pytest
from hypothesis import given, strategies as st

from hilbert_powers.combinatorics import (BinomialBasisPolynomial, binomial, evaluate_basis,
                                          lattice_point_count)


@pytest.mark.parametrize("a,b,expected", [(13, 4, 715), (5, 0, 1), (2, 3, 0), (-1, 0, 0), (4, -1, 0)])
def test_binomial_examples(a, b, expected):
    assert binomial(a, b) == expected


def test_pascal_identity():
    for a in range(1, 201):
        for b in range(1, a + 1):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


@pytest.mark.parametrize("n,e,s,expected", [
    (3, (8, 0, 0, 0), 2, 32),
    (4, (16, 12, 1, 0, 0), 5, 715),
    (2, (0, 0, 0), 7, 0),
])
def test_evaluate_basis_examples(n, e, s, expected):
    assert evaluate_basis(BinomialBasisPolynomial(n, e), s) == expected


def test_basis_length_checked():
    with pytest.raises(ValueError):
        BinomialBasisPolynomial(3, (1, 2))


def test_evaluate_rejects_nonpositive_s():
    with pytest.raises(ValueError):
        evaluate_basis(BinomialBasisPolynomial(1, (2, 0)), 0)


def _enumerate(n, j):
    return sum(1 for a in product(range(j + 1), repeat=n) if sum(a) == j)


def test_lattice_point_count_examples():
    assert lattice_point_count(3, 2) == _enumerate(3, 2) == 6
    assert lattice_point_count(4, 0) == 1
    assert lattice_point_count(1, 9) == 1


def test_lattice_point_count_matches_enumeration():
    for n in range(1, 6):
        for j in range(0, 9):
            assert lattice_point_count(n, j) == _enumerate(n, j)


coeffs = st.lists(st.integers(-50, 50), min_size=1, max_size=6)


@given(coeffs, coeffs, st.integers(1, 40), st.integers(-5, 5))
def test_evaluate_basis_is_linear(a, b, s, k):
    size = min(len(a), len(b))
    a, b = a[:size], b[:size]
    n = size - 1
    combo = tuple(k * x + y for x, y in zip(a, b))
    lhs = evaluate_basis(BinomialBasisPolynomial(n, combo), s)
    rhs = k * evaluate_basis(BinomialBasisPolynomial(n, tuple(a)), s) + evaluate_basis(
        BinomialBasisPolynomial(n, tuple(b)), s)
    assert lhs == rhs
