import itertools

import pytest

from oracles import naive_lattice_count, naive_monoid_count
from reslat.algebra import find_isomorphism, isomorphic, validate
from reslat.corpus import KEYS, builtin_algebra, load
from reslat.enumeration import (
    CHAIN_SIZE_CAP,
    DEFAULT_SIZE_CAP,
    PREDICATES,
    Exhausted,
    Found,
    count_residuated,
    element_names,
    enumerate_lattices,
    enumerate_residuated,
    evaluate,
    hunt,
    monoids_on,
    parse_hunt,
    size_cap,
    write_algebras,
)
from reslat.errors import CapExceeded, ParseError

# lattice counts are the known sequence; the residuated counts at 2..4 are
# confirmed by naive_monoid_count below and 26 at size 5 in extended mode
LATTICES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5}
RESIDUATED = {1: 1, 2: 1, 3: 2, 4: 7, 5: 26}
CHAINS = {2: 1, 3: 2, 4: 6, 5: 22, 6: 94}


@pytest.fixture(autouse=True)
def _no_cap_override(monkeypatch):
    monkeypatch.delenv("RESLAT_SIZE_CAP", raising=False)


@pytest.mark.parametrize("n", sorted(LATTICES))
def test_lattice_counts(n):
    assert len(enumerate_lattices(n)) == LATTICES[n] == naive_lattice_count(n)


@pytest.mark.extended
def test_lattice_count_six(monkeypatch):
    monkeypatch.setenv("RESLAT_SIZE_CAP", "6")
    assert len(enumerate_lattices(6)) == naive_lattice_count(6) == 15


@pytest.mark.parametrize("n", sorted(RESIDUATED))
def test_residuated_counts_frozen(n):
    assert count_residuated(n) == RESIDUATED[n]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monoids_per_lattice_match_brute_force(n):
    for L in enumerate_lattices(n):
        assert len(monoids_on(L)) == naive_monoid_count(n, L.leq)


@pytest.mark.extended
def test_monoids_per_lattice_match_brute_force_size_five():
    total = 0
    for L in enumerate_lattices(5):
        k = naive_monoid_count(5, L.leq)
        assert len(monoids_on(L)) == k
        total += k
    assert total == 26


@pytest.mark.parametrize("n", sorted(CHAINS))
def test_chain_counts(n):
    assert count_residuated(n, chains_only=True) == CHAINS[n]


@pytest.mark.extended
def test_size_six_count(monkeypatch):
    monkeypatch.setenv("RESLAT_SIZE_CAP", "6")
    assert count_residuated(6) == 129


def test_enumeration_is_deterministic():
    a = [(L.name, L.prod) for L in enumerate_residuated(4)]
    b = [(L.name, L.prod) for L in enumerate_residuated(4)]
    assert a == b
    assert [x for x, _ in a] == ["N4L1M1", "N4L1M2", "N4L1M3", "N4L1M4", "N4L1M5", "N4L1M6", "N4L2M1"]


def test_workers_give_the_same_list():
    serial = [(L.name, L.prod) for L in enumerate_residuated(5)]
    parallel = [(L.name, L.prod) for L in enumerate_residuated(5, workers=2)]
    assert serial == parallel


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pairwise_non_isomorphic(n):
    algebras = list(enumerate_residuated(n))
    for A, B in itertools.combinations(algebras, 2):
        assert find_isomorphism(A, B) is None, (A.name, B.name)


@pytest.mark.parametrize("key", [k for k in KEYS if builtin_algebra(k).n <= DEFAULT_SIZE_CAP])
def test_small_corpus_algebras_appear_once(key):
    L = builtin_algebra(key)
    hits = [A.name for A in enumerate_residuated(L.n) if isomorphic(A, L)]
    assert len(hits) == 1


def test_three_chains_are_the_two_classics():
    luk, godel = builtin_algebra("CHAIN3_LUK"), builtin_algebra("CHAIN3_GODEL")
    found = list(enumerate_residuated(3))
    assert sorted(isomorphic(A, luk) + 2 * isomorphic(A, godel) for A in found) == [1, 2]


def test_element_names():
    assert element_names(1) == ("0",)
    assert element_names(4) == ("0", "a", "b", "1")


def test_caps(monkeypatch):
    assert size_cap() == DEFAULT_SIZE_CAP and size_cap(True) == CHAIN_SIZE_CAP
    with pytest.raises(CapExceeded):
        list(enumerate_residuated(DEFAULT_SIZE_CAP + 1))
    with pytest.raises(CapExceeded):
        list(enumerate_residuated(CHAIN_SIZE_CAP + 1, chains_only=True))
    monkeypatch.setenv("RESLAT_SIZE_CAP", "3")
    assert size_cap() == size_cap(True) == 3
    with pytest.raises(CapExceeded):
        list(enumerate_residuated(4))


def test_write_algebras_roundtrip(tmp_path):
    algebras = list(enumerate_residuated(4))
    paths = write_algebras(algebras, tmp_path / "out")
    assert [p.name for p in paths] == [f"{L.name}.json" for L in algebras]
    for L, p in zip(algebras, paths):
        assert validate(load(p)).tables_equal(L)


def test_parse_hunt():
    assert parse_hunt("bl,!mtl=>mv") == (["bl", "!mtl"], "mv")
    assert parse_hunt("=>simple") == ([], "simple")
    with pytest.raises(ParseError):
        parse_hunt("bl")
    with pytest.raises(ParseError):
        parse_hunt("bl=>nonsense")


def test_evaluate_negation():
    L = builtin_algebra("RL7Q")
    assert evaluate("mtl", L)[0] is False
    assert evaluate("!mtl", L) == (True, None)
    with pytest.raises(ParseError):
        evaluate("nope", L)
    for p in PREDICATES:
        evaluate(p, builtin_algebra("BOOL4"))


def test_hunt_quasi_local_counterexample():
    r = hunt(["dense_quotient_quasi_local"], "quasi_local", 5)
    assert isinstance(r, Found)
    assert (r.algebra.name, r.size) == ("N5L3M3", 5)
    assert isomorphic(r.algebra, builtin_algebra("HEYTING5"))
    assert r.describe() == "counterexample N5L3M3 at size 5, witness (a)"


def test_hunt_dense_quotient_counterexample():
    r = hunt([], "dense_quotient_commutes", 5)
    assert isinstance(r, Found) and r.algebra.name == "N5L1M10"
    assert r.algebra.labels(r.witness) == ["c", "1"]
    assert isomorphic(r.algebra, builtin_algebra("CHAIN5_DQ"))


def test_hunt_glivenko_star_lifting():
    r = hunt(["glivenko", "star_equation"], "lifting_boolean_center", 5)
    assert isinstance(r, Found) and r.algebra.name == "N5L3M3"


@pytest.mark.parametrize("spec", ["bl=>lifting_boolean_center", "mv=>lifting_boolean_center",
                                  "simple=>local", "local=>quasi_local"])
def test_hunt_exhausts_on_true_implications(spec):
    ante, cons = parse_hunt(spec)
    r = hunt(ante, cons, 5)
    assert r == Exhausted(5)


def test_hunt_cap_is_lazy():
    # found at size 5, so asking for 7 never reaches the cap
    r = hunt(["dense_quotient_quasi_local"], "quasi_local", 7)
    assert isinstance(r, Found) and r.size == 5
    with pytest.raises(CapExceeded):
        hunt(["bl"], "lifting_boolean_center", 6)
