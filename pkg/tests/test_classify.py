import pytest

from oracles import naive_center, naive_maximal, naive_ord_infinite, neg
from reslat.classify import (
    TRIVIAL,
    classification_report,
    divisibility,
    is_bl,
    is_imtl,
    is_involutive,
    is_local,
    is_mtl,
    is_mv,
    is_quasi_local,
    is_simple,
    is_simple_by_filters,
    is_simple_by_order,
)
from reslat.corpus import KEYS, builtin_algebra
from reslat.enumeration import enumerate_residuated
from reslat.errors import TrivialAlgebra
from reslat.filters import all_filters
from reslat.quotients import dense_quotient, quotient

# class verdicts derived from the tables and confirmed by the naive checks below
VERDICTS = {
    #               mtl    imtl   bl     mv     glivenko star  local  quasi_local lifting
    "RL6D":         (True, False, False, False, True, False, True, True, True),
    "RL6C":         (True, True, False, False, True, False, True, True, True),
    "RL7Q":         (False, False, False, False, True, True, False, False, False),
    "BOOL2":        (True, True, True, True, True, True, True, True, True),
    "BOOL4":        (True, True, True, True, True, True, False, True, True),
    "CHAIN3_LUK":   (True, True, True, True, True, True, True, True, True),
    "CHAIN3_GODEL": (True, False, True, False, True, True, True, True, True),
    "CHAIN4_LUK":   (True, True, True, True, True, True, True, True, True),
    "CHAIN4_GODEL": (True, False, True, False, True, True, True, True, True),
    "CHAIN5_DQ":    (True, False, False, False, False, False, True, True, True),
    "HEYTING5":     (False, False, False, False, True, True, False, False, False),
}
COLUMNS = ("mtl", "imtl", "bl", "mv", "glivenko", "star_equation", "local", "quasi_local",
           "lifting_boolean_center")


def naive_mtl(L):
    return all(L.join[L.imp[a][b]][L.imp[b][a]] == L.top for a in L.elements for b in L.elements)


def naive_divisible(L):
    return all(L.meet[a][b] == L.prod[a][L.imp[a][b]] for a in L.elements for b in L.elements)


def naive_involutive(L):
    return all(neg(L, neg(L, a)) == a for a in L.elements)


@pytest.mark.parametrize("key", KEYS)
def test_frozen_verdicts(key):
    r = classification_report(builtin_algebra(key))
    assert tuple(r.verdicts[c] for c in COLUMNS) == VERDICTS[key]


def test_rl6c_divisibility_witness():
    L = builtin_algebra("RL6C")
    assert is_mtl(L) and is_imtl(L)
    v = is_bl(L)
    assert not v
    b, a = v.witness
    assert (L.label(b), L.label(a)) == ("b", "a")
    # b ^ a = a, which differs from b * (b -> a)
    assert L.meet[b][a] == a != L.bottom
    assert L.prod[b][L.imp[b][a]] != a
    assert not is_bl(dense_quotient(L).algebra)


def test_rl7q_quasi_local_witness():
    L = builtin_algebra("RL7Q")
    v = is_quasi_local(L)
    assert not v and L.label(v.witness[0]) == "a"
    assert is_quasi_local(dense_quotient(L).algebra)
    assert L.labels(is_mtl(L).witness) == ["a", "c"]


def test_rl6d_derived_sets():
    d = classification_report(builtin_algebra("RL6D")).derived
    assert d["Ds"] == ["c", "1"]
    assert d["Rad"] == ["b", "c", "d", "1"]
    assert d["B"] == ["0", "1"]
    assert d["|Max|"] == 1


def test_conditionals_recorded_on_rl7q():
    r = classification_report(builtin_algebra("RL7Q"))
    assert r.conditional == {
        "glivenko+star => lifting": False,
        "glivenko+star, A/Ds quasi-local => quasi-local": False,
    }


def test_trivial_algebra():
    (one,) = enumerate_residuated(1)
    with pytest.raises(TrivialAlgebra):
        is_simple(one)
    with pytest.raises(TrivialAlgebra):
        is_local(one)
    r = classification_report(one)
    assert r.verdicts["simple"] == r.verdicts["local"] == TRIVIAL


def test_class_predicates_match_naive(population_default):
    for L in population_default:
        assert is_mtl(L).holds == naive_mtl(L), L.name
        assert divisibility(L).holds == naive_divisible(L), L.name
        assert is_involutive(L).holds == naive_involutive(L), L.name
        assert is_bl(L).holds == (naive_mtl(L) and naive_divisible(L)), L.name
        assert is_mv(L).holds == (naive_mtl(L) and naive_divisible(L) and naive_involutive(L))


def test_report_never_raises(population_default):
    for L in population_default:
        classification_report(L)


def test_simple_two_ways(population_small):
    for L in population_small:
        if L.n > 1:
            assert is_simple_by_order(L).holds == is_simple_by_filters(L), L.name


def test_local_facts(population_small):
    for L in population_small:
        if L.n == 1:
            continue
        if is_simple(L):
            assert is_local(L)
        if is_local(L):
            (M,) = naive_maximal(L)
            assert M == naive_ord_infinite(L)
            assert naive_center(L) == {L.bottom, L.top}
            assert is_quasi_local(L)


def test_quasi_local_inherited_by_quotients(population_small):
    for L in population_small:
        if is_quasi_local(L):
            for F in all_filters(L):
                assert is_quasi_local(quotient(L, F).algebra), L.name


def test_as_dict_keys():
    d = classification_report(builtin_algebra("BOOL2")).as_dict()
    assert set(d) == {"name", "n", "verdicts", "witnesses", "conditional", "derived"}
