"""Regular elements, the Glivenko identity and the algebra on Reg(A).

Reg(A) is the set of fixed points of double negation. It carries the
operations ``x *' y = --(x*y)``, ``x v' y = --(x v y)``, ``x ^' y = --(x ^ y)``
together with the inherited implication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from reslat.algebra import (
    Morphism,
    ResiduatedLattice,
    boolean_center,
    from_tables,
    morphism_violation,
)
from reslat.errors import InvariantViolation, NotGlivenko, ReslatError


def double_neg(L: ResiduatedLattice, a: int) -> int:
    return L.neg(L.neg(a))


def regular_elements(L: ResiduatedLattice) -> frozenset[int]:
    reg = frozenset(a for a in L.elements if double_neg(L, a) == a)
    image = frozenset(L.neg(a) for a in L.elements)
    if reg != image or L.bottom not in reg or L.top not in reg:
        raise InvariantViolation(f"{L.name}: Reg(A) differs from the image of negation")
    return reg


def glivenko_violation(L: ResiduatedLattice) -> Optional[int]:
    """Least ``a`` with ``--(--a -> a) != 1``, or None."""
    for a in L.elements:
        if double_neg(L, L.imp[double_neg(L, a)][a]) != L.top:
            return a
    return None


def is_glivenko(L: ResiduatedLattice) -> bool:
    return glivenko_violation(L) is None


def star_equation_violation(L: ResiduatedLattice) -> Optional[tuple[int, int]]:
    """Least pair with ``(-a -> -b) -> -b != (-b -> -a) -> -a``, or None."""
    imp, neg = L.imp, L.neg
    for a in L.elements:
        for b in L.elements:
            na, nb = neg(a), neg(b)
            if imp[imp[na][nb]][nb] != imp[imp[nb][na]][na]:
                return (a, b)
    return None


def satisfies_star_equation(L: ResiduatedLattice) -> bool:
    return star_equation_violation(L) is None


@dataclass(frozen=True, eq=False)
class StarAlgebra:
    """Reg(A) with the double-negated operations.

    Tables are indexed by position in ``carrier`` (sorted parent indices).
    ``lattice`` is the validated residuated lattice on those tables, or None
    when validation failed (``failure`` then says why).
    """

    parent: ResiduatedLattice
    carrier: tuple[int, ...]
    star_join: tuple
    star_meet: tuple
    star_prod: tuple
    imp: tuple
    lattice: Optional[ResiduatedLattice]
    failure: Optional[str]
    double_negation: Optional[Morphism]
    oplus: Optional[tuple] = None
    mv_verdict: Optional[bool] = None
    mv_failure: Optional[str] = field(default=None)

    @property
    def is_involutive_rl(self) -> bool:
        return self.lattice is not None and self.lattice.is_involutive()

    @property
    def double_negation_is_surjective_morphism(self) -> bool:
        return self.double_negation is not None and self.double_negation.surjective

    def position(self, a: int) -> int:
        return self.carrier.index(a)


def star_algebra(L: ResiduatedLattice) -> StarAlgebra:
    """Build Reg(A) with the star operations and record what it satisfies.

    Both directions of "Glivenko iff Reg(A) is an involutive residuated
    lattice onto which double negation is a surjective morphism" are checked.
    """
    carrier = tuple(sorted(regular_elements(L)))
    pos = {x: i for i, x in enumerate(carrier)}
    dn = [double_neg(L, a) for a in L.elements]

    def star(t):
        return tuple(tuple(pos[dn[t[a][b]]] for b in carrier) for a in carrier)

    sj, sm, sp = star(L.join), star(L.meet), star(L.prod)
    imp = []
    for a in carrier:
        row = []
        for b in carrier:
            c = L.imp[a][b]
            if c not in pos:
                raise InvariantViolation(f"{L.name}: Reg(A) not closed under implication")
            row.append(pos[c])
        imp.append(tuple(row))
    imp = tuple(imp)

    lattice, failure = None, None
    try:
        lattice = from_tables(
            f"Reg({L.name})",
            [L.names[x] for x in carrier],
            sj, sm, sp, pos[L.bottom], pos[L.top], imp=imp,
        )
    except ReslatError as exc:
        failure = str(exc)

    dn_morphism = None
    if lattice is not None:
        dn_map = tuple(pos[dn[a]] for a in L.elements)
        if morphism_violation(L, lattice, dn_map) is None:
            dn_morphism = Morphism(L, lattice, dn_map, name="--")

    S = StarAlgebra(L, carrier, sj, sm, sp, imp, lattice, failure, dn_morphism)
    glivenko = is_glivenko(L)
    if glivenko != (S.is_involutive_rl and S.double_negation_is_surjective_morphism):
        raise InvariantViolation(
            f"{L.name}: Glivenko verdict {glivenko} disagrees with the structure of Reg(A)"
        )
    return S


def _mv_axiom_failure(k, oplus, neg, zero, names):
    """First failed MV-algebra axiom on ``range(k)``, or None."""
    one = neg[zero]
    nm = names.__getitem__
    for a in range(k):
        if oplus[a][zero] != a:
            return f"x+0=x at {nm(a)}"
        if neg[neg[a]] != a:
            return f"--x=x at {nm(a)}"
        if oplus[a][one] != one:
            return f"x+-0=-0 at {nm(a)}"
        for b in range(k):
            if oplus[a][b] != oplus[b][a]:
                return f"commutativity at ({nm(a)}, {nm(b)})"
            if oplus[neg[oplus[neg[a]][b]]][b] != oplus[neg[oplus[neg[b]][a]]][a]:
                return f"-(-x+y)+y=-(-y+x)+x at ({nm(a)}, {nm(b)})"
            for c in range(k):
                if oplus[oplus[a][b]][c] != oplus[a][oplus[b][c]]:
                    return f"associativity at ({nm(a)}, {nm(b)}, {nm(c)})"
    return None


def mv_structure_on_reg(L: ResiduatedLattice) -> StarAlgebra:
    """Reg(A) with ``x + y = -(-x *' -y)`` and its MV-algebra verdict.

    Each regular ``x`` equals ``-(-x)``, so the defining rule
    ``-a + -b = -(a *' b)`` fixes ``+`` on all of Reg(A).
    """
    bad = glivenko_violation(L)
    if bad is not None:
        raise NotGlivenko(f"{L.name}: Glivenko identity fails at {L.label(bad)}")
    S = star_algebra(L)
    pos = {x: i for i, x in enumerate(S.carrier)}
    k = len(S.carrier)
    rneg = [pos[L.neg(x)] for x in S.carrier]
    oplus = tuple(
        tuple(rneg[S.star_prod[rneg[i]][rneg[j]]] for j in range(k)) for i in range(k)
    )
    failure = _mv_axiom_failure(k, oplus, rneg, pos[L.bottom], [L.label(x) for x in S.carrier])
    verdict = failure is None
    if verdict != satisfies_star_equation(L):
        raise InvariantViolation(
            f"{L.name}: MV verdict on Reg(A) is {verdict} but the star equation says otherwise"
        )
    return StarAlgebra(
        S.parent, S.carrier, S.star_join, S.star_meet, S.star_prod, S.imp,
        S.lattice, S.failure, S.double_negation,
        oplus=oplus, mv_verdict=verdict, mv_failure=failure,
    )


def reg_boolean_center(L: ResiduatedLattice) -> frozenset[int]:
    """B(Reg(A)) as parent indices: regular e with ``e v' -e = 1``."""
    reg = regular_elements(L)
    return frozenset(
        e for e in reg if double_neg(L, L.join[e][L.neg(e)]) == L.top
    )


def boolean_center_equality(L: ResiduatedLattice) -> bool:
    from reslat.classify import is_mtl

    equal = boolean_center(L) == reg_boolean_center(L)
    if not equal and is_glivenko(L) and is_mtl(L):
        raise InvariantViolation(f"{L.name}: B(A) != B(Reg(A)) in a Glivenko MTL-algebra")
    return equal


def star_ops_coincide(L: ResiduatedLattice) -> bool:
    """Whether v' and ^' agree with v and ^ on Reg(A)."""
    reg = regular_elements(L)
    return all(
        double_neg(L, L.join[a][b]) == L.join[a][b]
        and double_neg(L, L.meet[a][b]) == L.meet[a][b]
        for a in reg
        for b in reg
    )
