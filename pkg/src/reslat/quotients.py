"""Congruences modulo a filter, quotient algebras and the maps between them.

Naming: ``p`` is the surjection onto A/Ds(A), ``r`` the one onto A/Rad(A),
``phi`` the induced map A/Ds(A) -> A/Rad(A), ``theta`` the map
A/Ds(A) -> Reg(A) sending a/Ds to --a.
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
    subalgebra,
)
from reslat.errors import (
    CenterNotPreserved,
    InvariantViolation,
    NotAMorphism,
    NotGlivenko,
)
from reslat.filters import (
    Filter,
    all_filters,
    dense_elements,
    mask_of,
    max_spectrum,
    maximal_filters,
    radical,
)
from reslat.regular import is_glivenko, star_algebra


@dataclass(frozen=True, eq=False)
class Congruence:
    algebra: ResiduatedLattice
    filter: Filter
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def same(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_names(self) -> list[list[str]]:
        return [self.algebra.labels(c) for c in self.classes]


def congruence(L: ResiduatedLattice, F: Filter) -> Congruence:
    """a ~ b iff a<->b is in F; checked to be an equivalence compatible with every operation."""
    rel = [[L.biimp(a, b) in F for b in L.elements] for a in L.elements]
    for a in L.elements:
        if not rel[a][a]:
            raise InvariantViolation(f"{L.name}: congruence not reflexive at {L.label(a)}")
        for b in L.elements:
            if rel[a][b] != rel[b][a]:
                raise InvariantViolation(f"{L.name}: congruence not symmetric")
            if rel[a][b]:
                for c in L.elements:
                    if rel[b][c] and not rel[a][c]:
                        raise InvariantViolation(f"{L.name}: congruence not transitive")
    class_of = [-1] * L.n
    classes = []
    for a in L.elements:
        if class_of[a] < 0:
            members = tuple(b for b in L.elements if rel[a][b])
            for b in members:
                class_of[b] = len(classes)
            classes.append(members)
    C = Congruence(L, F, tuple(classes), tuple(class_of))
    for key in ("join", "meet", "prod", "imp"):
        t = getattr(L, key)
        for a in L.elements:
            for b in L.elements:
                if not rel[a][b]:
                    continue
                for c in L.elements:
                    if not (rel[t[a][c]][t[b][c]] and rel[t[c][a]][t[c][b]]):
                        raise InvariantViolation(
                            f"{L.name}: ~ mod {F!r} not compatible with {key}"
                        )
    return C


@dataclass(frozen=True, eq=False)
class Quotient:
    """A/F together with the canonical surjection and the congruence."""

    algebra: ResiduatedLattice
    projection: Morphism
    congruence: Congruence

    def __iter__(self):
        # allows ``Q, p = quotient(L, F)``
        yield self.algebra
        yield self.projection

    def image(self, items) -> frozenset[int]:
        return self.projection.image(items)


def quotient(L: ResiduatedLattice, F: Filter, label: str = "F") -> Quotient:
    """A/F on the congruence classes; each class is named after its least element."""
    C = congruence(L, F)
    reps = [c[0] for c in C.classes]
    k = len(reps)

    def induced(t):
        return tuple(
            tuple(C.class_of[t[reps[i]][reps[j]]] for j in range(k)) for i in range(k)
        )

    names = [f"{L.label(r)}/{label}" for r in reps]
    Q = from_tables(
        f"{L.name}/{label}",
        names,
        induced(L.join),
        induced(L.meet),
        induced(L.prod),
        C.class_of[L.bottom],
        C.class_of[L.top],
        imp=induced(L.imp),
    )
    p = Morphism(L, Q, C.class_of, name=f"p_{label}")
    for a in L.elements:
        for b in L.elements:
            if L.leq[a][b] and not Q.leq[p(a)][p(b)]:
                raise InvariantViolation(f"{L.name}: quotient map not monotone")
    return Quotient(Q, p, C)


def dense_quotient(L: ResiduatedLattice) -> Quotient:
    return quotient(L, dense_elements(L), label="Ds")


def radical_quotient(L: ResiduatedLattice) -> Quotient:
    return quotient(L, radical(L), label="Rad")


def quotient_filter(Q: Quotient, F: Filter) -> Filter:
    """The image F/G of a filter F containing G, as a filter of A/G."""
    return Filter(Q.algebra, mask_of(Q.image(F.members)))


# -- dense elements of quotients -------------------------------------------


@dataclass(frozen=True)
class DenseComparison:
    filter: list[str]
    classes: list[list[str]]
    dense_of_quotient: list[str]
    image_of_dense: list[str]
    equal: bool
    only_in_dense_of_quotient: list[str]
    only_in_image: list[str]
    filter_inside_dense: bool
    oracle_agrees: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def dense_quotient_comparison(L: ResiduatedLattice, F: Filter) -> DenseComparison:
    """Compare Ds(A/F) with {x/F : x dense}, with an independent membership check.

    The oracle decides both sets straight from A: x/F is dense in A/F iff
    --x is in F, and x/F meets Ds(A) iff some dense y has x->y, y->x in F.
    """
    Q = quotient(L, F)
    QA, p = Q.algebra, Q.projection
    ds_q = frozenset(c for c in QA.elements if QA.neg(c) == QA.bottom)
    ds = dense_elements(L)
    image = Q.image(ds.members)

    oracle_ds_q = frozenset(p(x) for x in L.elements if L.neg(L.neg(x)) in F)
    oracle_image = frozenset(
        p(x)
        for x in L.elements
        if any(L.imp[x][y] in F and L.imp[y][x] in F for y in ds.members)
    )
    # classes rebuilt from x->y, y->x in F, without biimplication
    oracle_classes = sorted(
        {
            tuple(y for y in L.elements if L.imp[x][y] in F and L.imp[y][x] in F)
            for x in L.elements
        }
    )
    oracle_agrees = (
        oracle_ds_q == ds_q
        and oracle_image == image
        and oracle_classes == sorted(Q.congruence.classes)
    )
    if not oracle_agrees:
        raise InvariantViolation(f"{L.name}: dense-quotient oracle disagrees at {F!r}")

    inside = F <= ds
    if inside and ds_q != image:
        raise InvariantViolation(f"{L.name}: F inside Ds(A) but Ds(A/F) != Ds(A)/F")
    return DenseComparison(
        filter=F.names,
        classes=Q.congruence.class_names(),
        dense_of_quotient=QA.labels(ds_q),
        image_of_dense=QA.labels(image),
        equal=ds_q == image,
        only_in_dense_of_quotient=QA.labels(ds_q - image),
        only_in_image=QA.labels(image - ds_q),
        filter_inside_dense=inside,
        oracle_agrees=oracle_agrees,
    )


# -- the Boolean-center functor --------------------------------------------


def b_functor(f: Morphism) -> Morphism:
    """Restriction of ``f`` to the Boolean centers, as a Boolean-algebra morphism."""
    S, T = f.source, f.target
    bs, bt = sorted(boolean_center(S)), boolean_center(T)
    for e in bs:
        if f(e) not in bt:
            raise CenterNotPreserved(
                f"{f.name} sends central {S.label(e)} to non-central {T.label(f(e))}"
            )
    BS = subalgebra(S, bs, name=f"B({S.name})")
    BT = subalgebra(T, bt, name=f"B({T.name})")
    tpos = {x: i for i, x in enumerate(sorted(bt))}
    return Morphism(BS, BT, tuple(tpos[f(e)] for e in bs), name=f"B({f.name})")


@dataclass(frozen=True, eq=False)
class LiftingDiagram:
    """A -> A/Ds -> A/Rad with the Boolean-center maps and their verdicts."""

    algebra: ResiduatedLattice
    dense: Quotient
    radical: Quotient
    phi: Morphism
    B_p: Morphism
    B_r: Morphism
    B_phi: Morphism

    @property
    def lifting(self) -> bool:
        return self.B_r.surjective

    @property
    def glivenko_equivalence(self) -> Optional[bool]:
        """For Glivenko A: whether lifting and B(phi) surjective agree; None otherwise.

        Not asserted: the converse direction needs B(Reg(A)) inside B(A), which
        can fail outside MTL (the seven-element corpus algebra is an instance).
        """
        if not is_glivenko(self.algebra):
            return None
        return self.lifting == self.B_phi.surjective

    def summary(self) -> dict:
        return {
            "|B(A)|": self.B_r.source.n,
            "|B(A/Ds)|": self.B_p.target.n,
            "|B(A/Rad)|": self.B_r.target.n,
            "B(p) injective": self.B_p.injective,
            "B(r) injective": self.B_r.injective,
            "B(r) surjective": self.B_r.surjective,
            "B(phi) surjective": self.B_phi.surjective,
            "B(phi) isomorphism": self.B_phi.is_isomorphism,
            "lifting": self.lifting,
            "Glivenko: lifting iff B(phi) surjective": self.glivenko_equivalence,
        }


def phi_map(L: ResiduatedLattice, dq: Optional[Quotient] = None, rq: Optional[Quotient] = None) -> Morphism:
    """A/Ds -> A/Rad, a/Ds |-> a/Rad; well-definedness checked on every class member."""
    dq = dq or dense_quotient(L)
    rq = rq or radical_quotient(L)
    mapping = []
    for cls in dq.congruence.classes:
        targets = {rq.projection(a) for a in cls}
        if len(targets) != 1:
            raise InvariantViolation(f"{L.name}: phi not well defined on {L.labels(cls)}")
        mapping.append(targets.pop())
    phi = Morphism(dq.algebra, rq.algebra, tuple(mapping), name="phi")
    # r = phi . p
    for a in L.elements:
        if phi(dq.projection(a)) != rq.projection(a):
            raise InvariantViolation(f"{L.name}: r != phi . p at {L.label(a)}")
    return phi


def lifting_diagram(L: ResiduatedLattice) -> LiftingDiagram:
    dq, rq = dense_quotient(L), radical_quotient(L)
    phi = phi_map(L, dq, rq)
    D = LiftingDiagram(
        L, dq, rq, phi,
        b_functor(dq.projection), b_functor(rq.projection), b_functor(phi),
    )
    if not (D.B_p.injective and D.B_r.injective):
        raise InvariantViolation(f"{L.name}: B(p) or B(r) is not injective")
    if D.lifting and not D.B_phi.surjective:
        raise InvariantViolation(f"{L.name}: lifting Boolean center but B(phi) not surjective")
    return D


def has_lifting_boolean_center(L: ResiduatedLattice) -> bool:
    """Whether every central element of A/Rad(A) comes from a central element of A."""
    return lifting_diagram(L).lifting


def dense_quotient_lifting_check(L: ResiduatedLattice) -> tuple[bool, bool]:
    """(A/Ds has lifting, B(phi) is an isomorphism); the two must agree."""
    D = lifting_diagram(L)
    dq_lifting = has_lifting_boolean_center(D.dense.algebra)
    iso = D.B_phi.is_isomorphism
    if dq_lifting != iso:
        raise InvariantViolation(f"{L.name}: A/Ds lifting {dq_lifting} but B(phi) iso {iso}")
    return dq_lifting, iso


# -- theta and double negation ---------------------------------------------


def theta_iso(L: ResiduatedLattice) -> Morphism:
    """A/Ds(A) -> Reg(A), a/Ds |-> --a, checked bijective and commuting with p."""
    if not is_glivenko(L):
        raise NotGlivenko(f"{L.name} is not Glivenko")
    S = star_algebra(L)
    if S.lattice is None:
        raise InvariantViolation(f"{L.name}: Glivenko but Reg(A) is not a residuated lattice")
    pos = {x: i for i, x in enumerate(S.carrier)}
    dq = dense_quotient(L)
    mapping = []
    for cls in dq.congruence.classes:
        targets = {pos[L.neg(L.neg(a))] for a in cls}
        if len(targets) != 1:
            raise InvariantViolation(f"{L.name}: theta not well defined on {L.labels(cls)}")
        mapping.append(targets.pop())
    try:
        theta = Morphism(dq.algebra, S.lattice, tuple(mapping), name="theta")
    except NotAMorphism as exc:
        raise InvariantViolation(f"{L.name}: theta is not a morphism ({exc})") from None
    if not theta.is_isomorphism:
        raise InvariantViolation(f"{L.name}: theta is not bijective")
    dn = S.double_negation
    if dn is None or any(theta(dq.projection(a)) != dn(a) for a in L.elements):
        raise InvariantViolation(f"{L.name}: theta . p != --")
    return theta


# -- Max(A) versus Max(A/Ds) -----------------------------------------------


@dataclass(frozen=True)
class MaxCorrespondence:
    membership_transfer: bool
    max_correspondence: bool
    radical_membership: bool
    radical_transfer: bool
    homeomorphism: bool
    max_count: int
    max_count_dense_quotient: int
    max_count_radical_quotient: int
    details: list = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return (
            self.membership_transfer
            and self.max_correspondence
            and self.radical_membership
            and self.radical_transfer
            and self.homeomorphism
            and self.max_count == self.max_count_radical_quotient
        )


def max_spectrum_correspondence(L: ResiduatedLattice) -> MaxCorrespondence:
    """Compare Max(A) with Max(A/Ds(A)) (and count Max(A/Rad(A))).

    h(N) = N/Ds must be a bijection carrying each basic open S_Max(b) onto
    S_Max(b/Ds); for finite spaces that is the whole homeomorphism check.
    """
    dq = dense_quotient(L)
    Q, p = dq.algebra, dq.projection
    details = []
    maxA = maximal_filters(L)
    maxQ = maximal_filters(Q)
    images = [quotient_filter(dq, M) for M in maxA]

    membership = all((p(a) in img) == (a in M) for M, img in zip(maxA, images) for a in L.elements)
    if not membership:
        details.append("membership transfer fails")
    corr = {img.mask for img in images} == {N.mask for N in maxQ}
    if not corr:
        details.append("Max(A/Ds) != {N/Ds}")

    R = radical(L)
    R_img = quotient_filter(dq, R)
    rad_member = all((p(a) in R_img) == (a in R) for a in L.elements)
    rad_transfer = radical(Q).mask == R_img.mask
    if not rad_member:
        details.append("radical membership transfer fails")
    if not rad_transfer:
        details.append("Rad(A/Ds) != Rad(A)/Ds")

    homeo = corr and len({img.mask for img in images}) == len(maxA)
    if homeo:
        spA, spQ = max_spectrum(L), max_spectrum(Q)
        qindex = {N.mask: i for i, N in enumerate(spQ.points)}
        # spA.points is maxA, in the same order
        h = [qindex[img.mask] for img in images]
        for b in L.elements:
            if frozenset(h[i] for i in spA.basis[b]) != spQ.basis[p(b)]:
                homeo = False
                details.append(f"h(S_Max({L.label(b)})) != S_Max({Q.label(p(b))})")
        if frozenset(frozenset(h[i] for i in o) for o in spA.opens) != spQ.opens:
            homeo = False
            details.append("open families do not correspond")
    else:
        details.append("h is not a bijection")

    rq = radical_quotient(L)
    return MaxCorrespondence(
        membership_transfer=membership,
        max_correspondence=corr,
        radical_membership=rad_member,
        radical_transfer=rad_transfer,
        homeomorphism=homeo,
        max_count=len(maxA),
        max_count_dense_quotient=len(maxQ),
        max_count_radical_quotient=len(maximal_filters(rq.algebra)),
        details=details,
    )


# -- radical and double negation -------------------------------------------


@dataclass(frozen=True)
class RadicalDoubleNegation:
    radical_closed_under_double_negation: bool
    radical_of_reg_matches: bool
    radical: list[str]
    radical_of_reg: list[str]
    radical_meet_reg: list[str]


def radical_double_negation(L: ResiduatedLattice) -> RadicalDoubleNegation:
    """a in Rad iff --a in Rad, and Rad(Reg(A)) = Rad(A) n Reg(A), both computed."""
    if not is_glivenko(L):
        raise NotGlivenko(f"{L.name} is not Glivenko")
    R = radical(L)
    first = all((a in R) == (L.neg(L.neg(a)) in R) for a in L.elements)
    S = star_algebra(L)
    rad_reg = {S.carrier[i] for i in radical(S.lattice).members}
    meet = set(R.members) & set(S.carrier)
    return RadicalDoubleNegation(
        radical_closed_under_double_negation=first,
        radical_of_reg_matches=rad_reg == meet,
        radical=R.names,
        radical_of_reg=L.labels(rad_reg),
        radical_meet_reg=L.labels(meet),
    )


def proper_filter_quotients(L: ResiduatedLattice):
    """(F, A/F) for every proper filter F."""
    for F in all_filters(L):
        if F.proper:
            yield F, quotient(L, F)


def verify_quotient_representatives(L: ResiduatedLattice, F: Filter) -> bool:
    """Induced tables do not depend on the representatives picked (exhaustive swap)."""
    Q = quotient(L, F)
    C = Q.congruence
    for key in ("join", "meet", "prod", "imp"):
        t, tq = getattr(L, key), getattr(Q.algebra, key)
        for a in L.elements:
            for b in L.elements:
                if C.class_of[t[a][b]] != tq[C.class_of[a]][C.class_of[b]]:
                    return False
    return morphism_violation(L, Q.algebra, C.class_of) is None


__all__ = [
    "Congruence",
    "DenseComparison",
    "LiftingDiagram",
    "MaxCorrespondence",
    "Quotient",
    "RadicalDoubleNegation",
    "b_functor",
    "congruence",
    "dense_quotient",
    "dense_quotient_comparison",
    "dense_quotient_lifting_check",
    "has_lifting_boolean_center",
    "lifting_diagram",
    "max_spectrum_correspondence",
    "phi_map",
    "proper_filter_quotients",
    "quotient",
    "quotient_filter",
    "radical_double_negation",
    "radical_quotient",
    "theta_iso",
    "verify_quotient_representatives",
]
