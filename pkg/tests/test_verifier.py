import json

import pytest

from hilbert_powers import verifier
from hilbert_powers.verifier import (CONFIRMED, CONSISTENT, DISCREPANCY, REFUTED, Bounds,
                                     VerificationReport, run_all, run_check)


def test_catalog_ids_unique_and_listed():
    ids = [cid for cid, _, _ in verifier.list_claims()]
    assert len(ids) == len(set(ids))
    for required in ("thm-R34", "thm33-case1-coefficients", "conj1.1-positivity", "cor27",
                     "conj31", "conj31-identity", "question-phi", "ex28-n2"):
        assert required in ids


def test_refuted_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("x", "theorem", "", REFUTED, {})


def test_thm_r34_confirmed():
    r = run_check("thm-R34", Bounds(s_max=4, trials=3))
    assert r.verdict == CONFIRMED
    assert r.provenance["primes"] == list(verifier.DEFAULT_PRIMES)


def test_thm33_case1_coefficients_discrepancy():
    r = run_check("thm33-case1-coefficients")
    assert r.verdict == DISCREPANCY
    assert r.witness["expected"] == [8, 6]
    assert r.witness["actual"] == [8, 2]


def test_positivity_reports_negative_fits():
    r = run_check("conj1.1-positivity")
    assert r.verdict == DISCREPANCY
    assert r.details["negative"]["conj34-case7"] == [16, 12, 1, -2, 0]
    assert "caveat" in r.details


def test_conjectures_never_confirmed():
    for cid in ("conj31", "conj31-identity", "conj34-case3", "conj212-R47"):
        assert run_check(cid).verdict == CONSISTENT


def test_example_n2_discrepancy():
    r = run_check("ex28-n2")
    assert r.verdict == DISCREPANCY and r.witness is not None


def test_reports_reproducible_byte_for_byte():
    ids = ["thm-R34", "conj34-case7-coefficients", "question-phi"]
    a = verifier.reports_json(run_all(Bounds(s_max=3), ids, workers=3))
    b = verifier.reports_json(run_all(Bounds(s_max=3), list(reversed(ids)), workers=1))
    assert a == b
    data = json.loads(a)
    assert [d["claim_id"] for d in data] == sorted(ids)


def test_failed_theorems_filter():
    ok = VerificationReport("a", "conjecture", "", REFUTED, {}, witness={"x": 1})
    bad = VerificationReport("b", "theorem", "", REFUTED, {}, witness={"x": 1})
    assert verifier.failed_theorems([ok, bad]) == [bad]


def test_big_integers_serialized_as_strings():
    r = VerificationReport("a", "theorem", "", DISCREPANCY, {"s_max": 3},
                           witness={"expected": 2 ** 80, "actual": 1})
    d = r.to_dict()
    assert d["witness"]["expected"] == str(2 ** 80)
    assert d["parameters"]["s_max"] == "3"
