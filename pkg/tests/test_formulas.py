import pytest

from hilbert_powers.combinatorics import binomial
from hilbert_powers.formulas import (CATALOG, CONJ34_PAIRS, ci_quadric_series, ci_series_general,
                                     conj31_identity, cor27_identity, cor27_sides,
                                     example_ci_series, known_series, truncated_generic_series)
from hilbert_powers.monomial_engine import MonomialIdeal, from_squarefree_set, hilbert_data
from hilbert_powers.oracles import brute_force_dims


def test_ci_series_general_examples():
    assert ci_series_general((2, 2, 2), 2).series == (1, 3, 6, 10, 9, 3)
    assert ci_series_general((2, 3), 1).series == (1, 2, 2, 1)
    h = ci_series_general((3, 3), 2)
    assert h.length == 9 * binomial(3, 2) == 27
    assert list(h.series) == brute_force_dims(2, [(3, 0), (0, 3)], 2, len(h.dims))[:len(h.series)]


@pytest.mark.parametrize("degrees", [(1,), (3,), (1, 2), (2, 3), (3, 3), (1, 2, 3), (2, 2, 3)])
def test_ci_series_general_against_enumeration(degrees):
    n = len(degrees)
    gens = [tuple(d if j == i else 0 for j in range(n)) for i, d in enumerate(degrees)]
    for s in range(1, 4):
        h = ci_series_general(degrees, s)
        brute = brute_force_dims(n, gens, s, len(h.dims) + 1)
        assert brute[len(h.dims):] == [0, 0][: len(brute) - len(h.dims)]
        assert list(h.dims) == brute[: len(h.dims)]
        prod = 1
        for d in degrees:
            prod *= d
        assert h.length == prod * binomial(s + n - 1, n)


def test_ci_quadric_series_examples():
    for s in range(1, 6):
        h = ci_quadric_series(3, s)
        assert h.dims[2 * s] == 3 * binomial(s + 1, 2)
        assert h.dims[2 * s + 1] == binomial(s + 1, 2)
    assert ci_quadric_series(2, 2).series == (1, 2, 3, 4, 2)
    for n in range(1, 7):
        assert ci_quadric_series(n, 1).series == tuple(binomial(n, i) for i in range(n + 1))


def test_three_routes_agree():
    for n in range(1, 6):
        for s in range(1, 6):
            a = ci_quadric_series(n, s)
            assert a == ci_series_general((2,) * n, s) == hilbert_data(from_squarefree_set(n, []), s)
            assert a.top_degree == 2 * s + n - 2


def test_ci_quadric_lengths_long_range():
    for n in range(1, 6):
        for s in range(1, 31):
            assert ci_quadric_series(n, s).length == 2 ** n * binomial(s + n - 1, n)


def test_example_rows():
    for n in (3, 4, 5):
        for s in range(1, 7):
            assert example_ci_series(n, s) == ci_quadric_series(n, s)
    assert example_ci_series(2, 2, printed=False).series == (1, 2, 3, 4, 2)
    assert example_ci_series(2, 2, printed=True).series == (3, 3, 3, 3, 2)
    assert example_ci_series(2, 2, printed=True) != ci_quadric_series(2, 2)


def test_cor27_examples():
    assert cor27_sides(1, 2) == (12, 12)
    assert cor27_sides(3, 1) == (16, 16)
    assert cor27_sides(4, 1) == (32, 32)


def test_cor27_all():
    assert all(cor27_identity(k, s) for k in range(1, 5) for s in range(1, 101))


def test_conj31_identity_examples():
    assert conj31_identity(4, 5) == {"lhs": 715, "printed": False, "corrected": True}
    assert conj31_identity(2, 3)["corrected"]
    assert 4 * binomial(4, 2) - binomial(3, 1) == binomial(7, 2) == 21


def test_conj31_identity_corrected_range():
    for n in range(1, 9):
        for s in range(1, 31):
            assert conj31_identity(n, s)["corrected"]


def test_known_series_examples():
    assert known_series("thm-R34", 3).as_hilbert_data().series == (1, 3, 6, 10, 15, 21, 8)
    assert known_series("conj34-case4", 1).interesting == ((2, 3),)
    assert known_series("conj34-case1", 1).interesting == ((2, 5), (3, 2))
    assert known_series("conj-R45", 4).interesting_total == 95
    with pytest.raises(ValueError):
        known_series("conj-R46", 4).as_hilbert_data()
    with pytest.raises(KeyError):
        known_series("nope", 1)


def test_catalog_pairs_define_valid_ideals():
    for k, pairs in CONJ34_PAIRS.items():
        case = CATALOG[f"conj34-case{k}"]
        assert case.pairs == pairs
        assert isinstance(from_squarefree_set(4, pairs), MonomialIdeal)


def test_truncated_generic_series():
    assert truncated_generic_series(3, 5) == (1, 3, 1)
    assert truncated_generic_series(3, 4) == (1, 3, 2)
    assert truncated_generic_series(3, 3) == (1, 3, 3, 1)
