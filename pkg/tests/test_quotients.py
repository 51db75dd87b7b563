import pytest

from oracles import naive_classes, naive_maximal
from reslat.algebra import boolean_center, isomorphic
from reslat.classify import is_simple
from reslat.corpus import KEYS, builtin, builtin_algebra
from reslat.errors import NotGlivenko
from reslat.filters import all_filters, dense_elements, generated_filter, maximal_filters
from reslat.quotients import (
    dense_quotient,
    dense_quotient_comparison,
    dense_quotient_lifting_check,
    has_lifting_boolean_center,
    lifting_diagram,
    max_spectrum_correspondence,
    quotient,
    radical_double_negation,
    radical_quotient,
    theta_iso,
    verify_quotient_representatives,
)
from reslat.regular import is_glivenko


def _classes(L, F):
    return sorted(L.labels(c) for c in naive_classes(L, F.members))


@pytest.mark.parametrize("key", KEYS)
def test_congruence_classes_match_oracle(key):
    L = builtin_algebra(key)
    for F in all_filters(L):
        Q = quotient(L, F)
        assert sorted(Q.congruence.class_names()) == _classes(L, F)
        assert Q.algebra.n == len(Q.congruence.classes)
        assert verify_quotient_representatives(L, F)


def test_population_congruences_match_oracle(population_small):
    for L in population_small:
        for F in all_filters(L):
            Q = quotient(L, F)
            assert sorted(Q.congruence.classes) == sorted(naive_classes(L, F.members)), L.name


def test_rl6d_quotient_by_d():
    L = builtin_algebra("RL6D")
    F = generated_filter(L, [L.index("d")])
    assert F.names == ["d", "1"]
    Q = quotient(L, F)
    assert Q.congruence.class_names() == [["0", "a"], ["b", "c"], ["d", "1"]]
    assert Q.algebra.names == ("0/F", "b/F", "d/F")
    # b<->c = d, which lies in F
    assert L.label(L.biimp(L.index("b"), L.index("c"))) == "d"


def test_rl6d_claimed_witness_does_not_separate():
    L = builtin_algebra("RL6D")
    c = dense_quotient_comparison(L, generated_filter(L, [L.index("d")]))
    assert c.equal
    assert c.dense_of_quotient == c.image_of_dense == ["b/F", "d/F"]
    assert c.oracle_agrees
    assert builtin("RL6D").expected["dense quotient differs at F={d,1}"].value is True


def test_chain5_dense_quotient_differs():
    L = builtin_algebra("CHAIN5_DQ")
    F = generated_filter(L, [L.index("c")])
    c = dense_quotient_comparison(L, F)
    assert not c.equal
    assert c.classes == [["0", "a"], ["b"], ["c", "1"]]
    assert c.only_in_dense_of_quotient == ["b/F"]
    assert c.only_in_image == []
    assert not c.filter_inside_dense


def test_dense_quotient_inside_dense_on_population(population_small):
    for L in population_small:
        ds = dense_elements(L)
        for F in all_filters(L):
            if F <= ds:
                assert dense_quotient_comparison(L, F).equal, L.name


def test_rl7q_dense_quotient_classes():
    L = builtin_algebra("RL7Q")
    dq = dense_quotient(L)
    want = builtin("RL7Q").expected["dense quotient classes"].value
    assert dq.congruence.class_names() == want
    assert dq.algebra.is_involutive()


def test_rl7q_has_no_lifting():
    L = builtin_algebra("RL7Q")
    s = lifting_diagram(L).summary()
    assert (s["|B(A)|"], s["|B(A/Rad)|"]) == (2, 4)
    assert s["lifting"] is False
    assert s["B(p) injective"] and s["B(r) injective"]
    assert not has_lifting_boolean_center(L)


def test_heyting5_has_no_lifting():
    L = builtin_algebra("HEYTING5")
    assert builtin("HEYTING5").expected["lifting"].value is False
    assert not has_lifting_boolean_center(L)
    assert len(boolean_center(radical_quotient(L).algebra)) == 4


@pytest.mark.parametrize("key", ["RL7Q", "HEYTING5"])
def test_glivenko_equivalence_fails_outside_mtl(key):
    # Glivenko, B(phi) onto, yet B(r) not onto
    D = lifting_diagram(builtin_algebra(key))
    assert D.B_phi.surjective and not D.lifting
    assert D.glivenko_equivalence is False


def test_lifting_diagram_on_population(population_default):
    for L in population_default:
        D = lifting_diagram(L)
        assert D.B_p.injective and D.B_r.injective
        if D.lifting:
            assert D.B_phi.surjective
        a, b = dense_quotient_lifting_check(L)
        assert a == b


def test_theta_for_glivenko(population_small):
    for L in population_small:
        if is_glivenko(L):
            assert theta_iso(L).is_isomorphism
        else:
            with pytest.raises(NotGlivenko):
                theta_iso(L)


def test_theta_rl7q():
    t = theta_iso(builtin_algebra("RL7Q")).describe()
    assert t["map"] == {"0/Ds": "0", "a/Ds": "b", "c/Ds": "d", "e/Ds": "1"}


@pytest.mark.parametrize("key", KEYS)
def test_max_correspondence_corpus(key):
    mc = max_spectrum_correspondence(builtin_algebra(key))
    assert mc.all_hold, mc.details


def test_max_correspondence_population(population_small):
    for L in population_small:
        mc = max_spectrum_correspondence(L)
        assert mc.all_hold, (L.name, mc.details)
        assert mc.max_count == len(naive_maximal(L))


def test_radical_double_negation_rl7q():
    r = radical_double_negation(builtin_algebra("RL7Q"))
    assert r.radical_closed_under_double_negation and r.radical_of_reg_matches
    assert r.radical_of_reg == r.radical_meet_reg == ["1"]


def test_quotient_simple_iff_maximal(population_small):
    for L in population_small:
        maxes = set(maximal_filters(L))
        for F in all_filters(L):
            if F.proper:
                assert is_simple(quotient(L, F).algebra).holds == (F in maxes), L.name


def test_quotient_by_trivial_filter_is_isomorphic():
    L = builtin_algebra("RL6C")
    assert isomorphic(quotient(L, generated_filter(L)).algebra, L)
    assert isomorphic(dense_quotient(L).algebra, L)
