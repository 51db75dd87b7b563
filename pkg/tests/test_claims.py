import pytest

from oracles import naive_classes
from reslat.claims import (
    CLAIM_IDS,
    FAIL,
    NA,
    PASS,
    any_failed,
    check_claims,
    recorded_dense_comparisons,
)
from reslat.corpus import KEYS, builtin_algebra
from reslat.filters import generated_filter

COUNTS = {
    "RL6D": (38, 0, 9),
    "RL6C": (38, 0, 9),
    "RL7Q": (29, 4, 14),
    "BOOL2": (43, 0, 4),
    "BOOL4": (38, 0, 9),
    "CHAIN3_LUK": (43, 0, 4),
    "CHAIN3_GODEL": (41, 0, 6),
    "CHAIN4_LUK": (43, 0, 4),
    "CHAIN4_GODEL": (41, 0, 6),
    "CHAIN5_DQ": (30, 0, 17),
    "HEYTING5": (29, 4, 14),
}
# each fails on a Glivenko algebra that is not MTL
REFUTED = {
    "glivenko-lifting-iff-bphi-surjective",
    "glivenko-dense-quotient-lifting-transfers",
    "glivenko-star-has-lifting",
    "glivenko-star-quasi-local",
}


def _by_id(results):
    return {r.claim: r for r in results}


@pytest.mark.parametrize("key", KEYS)
def test_corpus_status_counts(key):
    results = check_claims(builtin_algebra(key), key)
    assert [r.claim for r in results] == list(CLAIM_IDS)
    got = tuple(sum(r.status == s for r in results) for s in (PASS, FAIL, NA))
    assert got == COUNTS[key]


@pytest.mark.parametrize("key", ["RL7Q", "HEYTING5"])
def test_refuted_claims(key):
    results = check_claims(builtin_algebra(key), key)
    assert {r.claim for r in results if r.status == FAIL} == REFUTED
    assert any_failed(results)
    r = _by_id(results)
    assert r["lifting-can-fail"].status == PASS
    assert r["dense-quotient-quasi-local-insufficient"].status == PASS


def test_only_the_refuted_claims_fail_on_population(population_default):
    for L in population_default:
        bad = {r.claim for r in check_claims(L) if r.status == FAIL}
        assert bad <= REFUTED, (L.name, bad)


def test_rl6d_divergence_note():
    r = _by_id(check_claims(builtin_algebra("RL6D"), "RL6D"))["dense-quotient-can-differ"]
    assert r.status == NA
    assert "b<->c = d lies in F" in r.note


def test_chain5_witnesses_dense_quotient_difference():
    r = _by_id(check_claims(builtin_algebra("CHAIN5_DQ"), "CHAIN5_DQ"))["dense-quotient-can-differ"]
    assert r.status == PASS
    assert r.witness.startswith("F={c, 1}")


def test_rl6d_recorded_comparison_matches_oracle():
    L = builtin_algebra("RL6D")
    (c,) = recorded_dense_comparisons(L, "RL6D")
    assert c["filter"] == ["d", "1"]
    F = generated_filter(L, [L.index("d")])
    assert c["classes"] == [L.labels(x) for x in naive_classes(L, F.members)]
    assert c["differs"] is False and c["recorded"] is True and c["diverges"] is True
    assert c["oracle_agrees"]
    assert recorded_dense_comparisons(L, "RL6D") == [c]


def test_no_recorded_comparison_outside_corpus():
    assert recorded_dense_comparisons(builtin_algebra("RL6D"), None) == []


def test_result_lines_are_stable():
    a = [r.line() for r in check_claims(builtin_algebra("RL7Q"), "RL7Q")]
    b = [r.line() for r in check_claims(builtin_algebra("RL7Q"), "RL7Q")]
    assert a == b
    assert a[0].startswith("PASS order-via-implication:")
