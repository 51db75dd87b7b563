import pytest

from oracles import naive_glivenko, naive_regular, naive_star_equation
from reslat.algebra import boolean_center
from reslat.corpus import KEYS, builtin_algebra
from reslat.errors import NotGlivenko
from reslat.regular import (
    boolean_center_equality,
    glivenko_violation,
    is_glivenko,
    mv_structure_on_reg,
    reg_boolean_center,
    regular_elements,
    satisfies_star_equation,
    star_algebra,
    star_equation_violation,
    star_ops_coincide,
)

# derived by a direct scan of the tables, confirmed by the oracles below
REG = {
    "RL6D": ["0", "a", "d", "1"],
    "RL6C": ["0", "a", "b", "c", "d", "1"],
    "RL7Q": ["0", "b", "d", "1"],
    "BOOL2": ["0", "1"],
    "BOOL4": ["0", "x", "y", "1"],
    "CHAIN3_LUK": ["0", "1/2", "1"],
    "CHAIN3_GODEL": ["0", "1"],
    "CHAIN4_LUK": ["0", "1/3", "2/3", "1"],
    "CHAIN4_GODEL": ["0", "1"],
    "CHAIN5_DQ": ["0", "a", "c", "1"],
    "HEYTING5": ["0", "a", "b", "1"],
}
STAR_FAILS = {"RL6D": ("a", "b"), "RL6C": ("a", "b"), "CHAIN5_DQ": ("a", "b")}
NOT_GLIVENKO = {"CHAIN5_DQ": "b"}


@pytest.mark.parametrize("key", KEYS)
def test_regular_elements_frozen(key):
    L = builtin_algebra(key)
    assert L.labels(regular_elements(L)) == REG[key]
    assert regular_elements(L) == naive_regular(L)


@pytest.mark.parametrize("key", KEYS)
def test_glivenko_frozen(key):
    L = builtin_algebra(key)
    assert is_glivenko(L) == naive_glivenko(L) == (key not in NOT_GLIVENKO)
    bad = glivenko_violation(L)
    assert (bad and L.label(bad)) == NOT_GLIVENKO.get(key)


@pytest.mark.parametrize("key", KEYS)
def test_star_equation_frozen(key):
    L = builtin_algebra(key)
    assert satisfies_star_equation(L) == naive_star_equation(L) == (key not in STAR_FAILS)
    bad = star_equation_violation(L)
    assert (bad and tuple(L.label(x) for x in bad)) == STAR_FAILS.get(key)


def test_rl7q_satisfies_star_equation():
    # a full scan finds no failing pair, so Reg(RL7Q) is an MV-algebra
    L = builtin_algebra("RL7Q")
    assert star_equation_violation(L) is None
    assert mv_structure_on_reg(L).mv_verdict is True


def test_rl7q_reg_center_is_not_inside_center():
    L = builtin_algebra("RL7Q")
    b = L.index("b")
    assert b in reg_boolean_center(L)
    assert L.label(L.join[b][L.neg(b)]) == "e"
    assert b not in boolean_center(L)
    assert not boolean_center_equality(L)
    assert not star_ops_coincide(L)


@pytest.mark.parametrize("key", [k for k in KEYS if k not in NOT_GLIVENKO])
def test_double_negation_is_surjective_morphism(key):
    L = builtin_algebra(key)
    S = star_algebra(L)
    assert S.lattice is not None and S.lattice.is_involutive()
    assert S.double_negation.surjective
    assert S.double_negation.image(L.elements) == frozenset(range(len(S.carrier)))


def test_non_glivenko_reg_structure():
    L = builtin_algebra("CHAIN5_DQ")
    S = star_algebra(L)
    assert not (S.is_involutive_rl and S.double_negation_is_surjective_morphism)
    with pytest.raises(NotGlivenko):
        mv_structure_on_reg(L)


@pytest.mark.parametrize("key", [k for k in KEYS if k not in NOT_GLIVENKO])
def test_mv_on_reg_iff_star(key):
    L = builtin_algebra(key)
    assert mv_structure_on_reg(L).mv_verdict == satisfies_star_equation(L)


def test_population_glivenko_agrees_with_oracle(population_small):
    for L in population_small:
        assert is_glivenko(L) == naive_glivenko(L), L.name
        assert satisfies_star_equation(L) == naive_star_equation(L), L.name
        assert regular_elements(L) == naive_regular(L), L.name
        star_algebra(L)
