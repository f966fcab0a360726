from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hilbert_powers import linalg
from hilbert_powers.linalg import PrimeFieldContext, SliceMatrix, matrix_rank, rank_with_early_exit

BACKENDS = ["numpy"] + (["compiled"] if linalg._ext is not None else [])


def rational_rank(rows):
    a = [[Fraction(int(x)) for x in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def test_context_validates_prime():
    with pytest.raises(ValueError):
        PrimeFieldContext(1_000_001)  # composite
    with pytest.raises(ValueError):
        PrimeFieldContext(65537)  # too small
    ctx = PrimeFieldContext()
    assert ctx.p == 1_000_003
    assert (ctx.inverse(12345) * 12345) % ctx.p == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_identity_and_zero(backend):
    assert matrix_rank(np.eye(5, dtype=np.int64), backend=backend) == 5
    assert matrix_rank(np.zeros((4, 5), dtype=np.int64), backend=backend) == 0


@pytest.mark.parametrize("backend", BACKENDS)
def test_random_against_rational_oracle(backend):
    rng = np.random.default_rng(2024)
    a = rng.integers(-3, 4, size=(50, 20))
    assert matrix_rank(a, p=1_000_003, backend=backend) == rational_rank(a) == 20
    low = rng.integers(-3, 4, size=(50, 6)) @ rng.integers(-3, 4, size=(6, 20))
    assert matrix_rank(low, p=1_000_003, backend=backend) == rational_rank(low)


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=40, deadline=None)
@given(st.data())
def test_small_matrices_match_rational_rank(backend, data):
    rows = data.draw(st.integers(1, 8))
    cols = data.draw(st.integers(1, 8))
    mat = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=cols, max_size=cols),
                             min_size=rows, max_size=rows))
    assert matrix_rank(np.array(mat), backend=backend) == rational_rank(mat)


@pytest.mark.parametrize("backend", BACKENDS)
def test_row_permutation_invariance(backend):
    rng = np.random.default_rng(5)
    a = rng.integers(0, 7, size=(30, 4)) @ rng.integers(0, 7, size=(4, 25))
    base = matrix_rank(a, backend=backend)
    for _ in range(5):
        assert matrix_rank(a[rng.permutation(len(a))], backend=backend) == base


@pytest.mark.parametrize("backend", BACKENDS)
def test_early_exit_stops_consuming(backend):
    ctx = PrimeFieldContext()
    consumed = []

    def stream():
        for k in range(10):
            consumed.append(k)
            yield np.eye(4, dtype=np.int64)[k % 4]

    assert rank_with_early_exit(SliceMatrix(ctx, 4, stream()), cap=4, backend=backend) == 4
    assert consumed == [0, 1, 2, 3]
    assert rank_with_early_exit(SliceMatrix(ctx, 4, [np.eye(4, dtype=np.int64)]), cap=2,
                                backend=backend) == 2


def test_backends_agree_on_large_primes():
    if "compiled" not in BACKENDS:
        pytest.skip("compiled kernel not built")
    rng = np.random.default_rng(11)
    p = 2_147_483_647
    a = rng.integers(0, p, size=(40, 10)) @ np.eye(10, 30, dtype=np.int64)
    a = np.vstack([a, (a[:5] * 3) % p])
    assert matrix_rank(a, p=p, backend="numpy") == matrix_rank(a, p=p, backend="compiled") == 10


def test_cap_validation():
    with pytest.raises(ValueError):
        rank_with_early_exit(SliceMatrix(PrimeFieldContext(), 3, []), cap=4)


def test_deterministic():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 5, size=(20, 20))
    assert len({matrix_rank(a) for _ in range(3)}) == 1
