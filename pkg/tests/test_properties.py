"""Algebraic identities over random members of the small population."""

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import population
from oracles import naive_filters
from reslat.algebra import boolean_center, direct_product, morphism_violation
from reslat.classify import is_glivenko, is_mtl, is_quasi_local
from reslat.filters import all_filters, dense_elements, radical
from reslat.quotients import quotient
from reslat.regular import regular_elements

POP = [L for L in population(5) if L.n > 1]
algebras = st.sampled_from(POP)
SETTINGS = settings(max_examples=80, deadline=None)


@given(algebras, st.data())
@SETTINGS
def test_residuation_and_negation_laws(L, data):
    a, b, c = (data.draw(st.sampled_from(list(L.elements))) for _ in range(3))
    assert L.leq[a][L.imp[b][c]] == L.leq[L.prod[a][b]][c]
    assert L.leq[a][L.neg(L.neg(a))]
    assert L.neg(L.neg(L.neg(a))) == L.neg(a)
    assert L.prod[a][L.neg(a)] == L.bottom
    assert L.leq[L.prod[a][b]][L.meet[a][b]]
    assert (L.imp[a][b] == L.top) == L.leq[a][b]


@given(algebras, st.data())
@SETTINGS
def test_powers_decrease(L, data):
    a = data.draw(st.sampled_from(list(L.elements)))
    trace = [L.power(a, k) for k in range(1, L.n + 2)]
    assert all(L.leq[y][x] for x, y in zip(trace, trace[1:]))
    assert L.stable_power(a) == trace[-1]


@given(algebras)
@SETTINGS
def test_filter_intersections_are_filters(L):
    fs = all_filters(L)
    masks = {F.mask for F in fs}
    assert masks == {sum(1 << a for a in F) for F in naive_filters(L)}
    for F in fs:
        for G in fs:
            assert F.mask & G.mask in masks


@given(algebras, st.data())
@SETTINGS
def test_projection_is_morphism(L, data):
    F = data.draw(st.sampled_from(all_filters(L)))
    Q = quotient(L, F)
    assert morphism_violation(L, Q.algebra, Q.projection.map) is None
    # the kernel of the projection is F
    assert {a for a in L.elements if Q.projection(a) == Q.algebra.top} == set(F.members)


@given(algebras)
@SETTINGS
def test_center_inside_regular(L):
    B = boolean_center(L)
    assert B <= regular_elements(L)
    assert all(L.prod[e][e] == e for e in B)


@given(algebras)
@SETTINGS
def test_dense_inside_radical(L):
    assert dense_elements(L) <= radical(L)


@given(st.sampled_from([L for L in POP if L.n <= 3]), st.sampled_from([L for L in POP if L.n <= 3]))
@settings(max_examples=30, deadline=None)
def test_product_preserves_classes(A, B):
    P = direct_product(A, B)
    assert is_mtl(P).holds == (is_mtl(A).holds and is_mtl(B).holds)
    assert is_glivenko(P).holds == (is_glivenko(A).holds and is_glivenko(B).holds)
    RP = radical(P).members
    assert RP == {i * B.n + j for i in radical(A).members for j in radical(B).members}
    assert len(boolean_center(P)) == len(boolean_center(A)) * len(boolean_center(B))


@given(algebras)
@SETTINGS
def test_quasi_local_survives_quotients(L):
    if is_quasi_local(L):
        assert all(is_quasi_local(quotient(L, F).algebra) for F in all_filters(L))
