import numpy as np
import pytest

from hilbert_powers import linalg
from hilbert_powers.combinatorics import binomial
from hilbert_powers.errors import PreconditionError
from hilbert_powers.formulas import truncated_generic_series
from hilbert_powers.generic import (FormSyntaxError, GenericIdealSpec, QuadraticForm,
                                    hilbert_data_generic, is_power_full, parse_form, phi_probe,
                                    power_slice_dim, sample_forms)
from hilbert_powers.linalg import PrimeFieldContext
from hilbert_powers.monomial_engine import from_squarefree_set, hilbert_data

WITNESS = ["x^2", "y^2", "z^2", "x*y + x*z + y*z", "x*z + 2*y*z"]


def witness_spec(p=1_000_003):
    ctx = PrimeFieldContext(p)
    return GenericIdealSpec.explicit(3, [parse_form(3, t, ctx) for t in WITNESS], p=p)


# canonical degree-2 order for n=3: x^2, xy, xz, y^2, yz, z^2
def test_parse_form_examples():
    assert parse_form(3, "x*y + x*z + y*z").coeffs == (0, 1, 1, 0, 1, 0)
    assert parse_form(3, "x*z + 2*y*z").coeffs == (0, 0, 1, 0, 2, 0)
    assert parse_form(3, "x1^2").coeffs == (1, 0, 0, 0, 0, 0)
    assert parse_form(3, "-x1*x3 + 3 * x2^2 - x1*x3").coeffs == (0, 0, 1_000_003 - 2, 3, 0, 0)


@pytest.mark.parametrize("text,pos", [("x*y +", 5), ("x*y $ z", 4), ("x y", 2), ("x^", 2)])
def test_parse_form_syntax_errors(text, pos):
    with pytest.raises(FormSyntaxError) as exc:
        parse_form(3, text)
    assert exc.value.pos == pos


@pytest.mark.parametrize("text", ["x^3", "x", "x*y*z", "5"])
def test_parse_form_rejects_non_quadratic(text):
    with pytest.raises(FormSyntaxError, match="non-quadratic"):
        parse_form(3, text)


def test_parse_form_variable_ranges():
    with pytest.raises(FormSyntaxError):
        parse_form(2, "z^2")
    with pytest.raises(FormSyntaxError):
        parse_form(5, "x*y")  # aliases only for n <= 4
    assert parse_form(5, "x5^2").coeffs[-1] == 1


def test_sample_forms_deterministic():
    spec = GenericIdealSpec(n=3, r=4, p=1_000_003, seed=1)
    forms = sample_forms(spec)
    assert len(forms) == 4 and all(len(f.coeffs) == 6 for f in forms)
    assert forms == sample_forms(GenericIdealSpec(n=3, r=4, p=1_000_003, seed=1))
    assert forms != sample_forms(GenericIdealSpec(n=3, r=4, p=1_000_003, seed=2))
    assert all(0 <= c < spec.p for f in forms for c in f.coeffs)


def test_spec_refuses_too_few_generators():
    with pytest.raises(ValueError):
        GenericIdealSpec(n=3, r=2)


def test_spec_refuses_small_prime():
    with pytest.raises(ValueError):
        GenericIdealSpec(n=3, r=4, p=65537)


def test_power_slice_dim_examples():
    assert power_slice_dim(GenericIdealSpec(3, 4, seed=1), 1, 2) == 4
    assert power_slice_dim(GenericIdealSpec(3, 3, seed=1), 2, 4) == 15 - 9
    assert power_slice_dim(GenericIdealSpec(3, 5, seed=1), 2, 4) == binomial(6, 2)
    assert power_slice_dim(GenericIdealSpec(3, 5, seed=1), 2, 3) == 0


def test_hilbert_data_generic_examples():
    assert hilbert_data_generic(GenericIdealSpec(3, 4, seed=3), 2).series == (1, 3, 6, 10, 5)
    assert hilbert_data_generic(GenericIdealSpec(3, 5, seed=3), 1).series == (1, 3, 1)


def test_complete_intersection_matches_monomial_engine():
    for n in range(1, 5):
        for s in range(1, 5):
            generic = hilbert_data_generic(GenericIdealSpec(n, n, seed=n + 10 * s), s)
            assert generic == hilbert_data(from_squarefree_set(n, []), s)


@pytest.mark.parametrize("n,r", [(n, r) for n in (1, 2, 3) for r in range(n, 7)] + [(4, 5), (5, 6)])
def test_s1_truncated_series(n, r):
    h = hilbert_data_generic(GenericIdealSpec(n, r, seed=17), 1)
    assert h.series == truncated_generic_series(n, r)


def test_adding_a_generator_never_increases_dims():
    for n, r in ((3, 3), (3, 4), (4, 5)):
        small = GenericIdealSpec(n, r, seed=4)
        forms = sample_forms(small)
        extra = sample_forms(GenericIdealSpec(n, r + 1, seed=99))[-1]
        large = GenericIdealSpec.explicit(n, forms + [extra], p=small.p)
        for s in (1, 2, 3):
            a = hilbert_data_generic(small, s).dims
            b = hilbert_data_generic(large, s).dims
            assert all(y <= x for x, y in zip(a, b))


def test_is_power_full_examples():
    assert is_power_full(GenericIdealSpec(3, 5, seed=2), 2)
    assert not is_power_full(GenericIdealSpec(3, 4, seed=2), 3)
    assert is_power_full(witness_spec(), 3)


def test_explicit_non_artinian_refused():
    spec = GenericIdealSpec.explicit(3, [parse_form(3, t) for t in ("x^2", "y^2", "x*y")])
    with pytest.raises(PreconditionError):
        hilbert_data_generic(spec, 1)


def test_primes_agree():
    for p in (1_048_583, 16_777_259):
        assert hilbert_data_generic(GenericIdealSpec(3, 4, p=p, seed=5), 3).series == (
            1, 3, 6, 10, 15, 21, 8)


@pytest.mark.skipif(linalg._ext is None, reason="compiled kernel not built")
def test_backends_agree_on_slices():
    spec = GenericIdealSpec(4, 5, seed=8)
    for s in (1, 2, 3):
        for d in range(2 * s, 2 * s + 3):
            assert power_slice_dim(spec, s, d, "numpy") == power_slice_dim(spec, s, d, "compiled")


def test_phi_probe_small():
    table = phi_probe(3, range(4, 7), 5, trials=2, seed=0)
    assert table.minimal_s[4] is None
    assert table.minimal_s[5] == 2
    assert table.minimal_s[6] in (1, 2)
    assert table.minimal_r == 5
    assert not table.warnings
    assert phi_probe(2, [3], 3, trials=1).minimal_s[3] == 1


def test_phi_probe_reproducible():
    a = phi_probe(3, range(3, 6), 3, trials=2, seed=4).to_dict()
    b = phi_probe(3, range(3, 6), 3, trials=2, seed=4).to_dict()
    assert a == b


def test_quadratic_form_str():
    assert str(QuadraticForm(3, (0, 0, 1, 0, 2, 0))) == "x1*x3 + 2*x2*x3"
