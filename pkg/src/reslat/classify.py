"""Class membership: MTL, IMTL, BL, MV, involutive, Glivenko, simple, local,
semilocal, quasi-local, plus the aggregated per-algebra report.

Predicates returning :class:`Verdict` carry the least violating tuple (in
index order) when they fail, so failures reproduce across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from reslat.algebra import ResiduatedLattice, boolean_center
from reslat.errors import InvariantViolation, TrivialAlgebra
from reslat.filters import (
    all_filters,
    dense_elements,
    maximal_filters,
    order_infinite_elements,
    prime_filters,
    radical,
)
from reslat.regular import (
    glivenko_violation,
    mv_structure_on_reg,
    regular_elements,
    star_equation_violation,
)

TRIVIAL = "trivial"


class Verdict(NamedTuple):
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def _first(pairs) -> Verdict:
    for w in pairs:
        return Verdict(False, w)
    return Verdict(True)


def is_mtl(L: ResiduatedLattice) -> Verdict:
    """Prelinearity: (a->b) v (b->a) = 1."""
    imp, join = L.imp, L.join
    return _first(
        (a, b) for a in L.elements for b in L.elements if join[imp[a][b]][imp[b][a]] != L.top
    )


def divisibility(L: ResiduatedLattice) -> Verdict:
    """a ^ b = a * (a->b)."""
    return _first(
        (a, b)
        for a in L.elements
        for b in L.elements
        if L.meet[a][b] != L.prod[a][L.imp[a][b]]
    )


def is_involutive(L: ResiduatedLattice) -> Verdict:
    return _first((a,) for a in L.elements if L.neg(L.neg(a)) != a)


def is_imtl(L: ResiduatedLattice) -> Verdict:
    m = is_mtl(L)
    return m if not m else is_involutive(L)


def is_bl(L: ResiduatedLattice) -> Verdict:
    m = is_mtl(L)
    return m if not m else divisibility(L)


def is_mv(L: ResiduatedLattice) -> Verdict:
    """Involutive BL-algebra; checked against the MV axioms on Reg(A) = A."""
    inv = is_involutive(L)
    verdict = is_bl(L) if inv else inv
    if inv:
        direct = mv_structure_on_reg(L).mv_verdict
        if direct != verdict.holds:
            raise InvariantViolation(
                f"{L.name}: involutive BL verdict {verdict.holds} vs MV axioms {direct}"
            )
    return verdict


def is_glivenko(L: ResiduatedLattice) -> Verdict:
    bad = glivenko_violation(L)
    return Verdict(True) if bad is None else Verdict(False, (bad,))


def star_equation(L: ResiduatedLattice) -> Verdict:
    bad = star_equation_violation(L)
    return Verdict(True) if bad is None else Verdict(False, bad)


def _nontrivial(L, what):
    if L.n == 1:
        raise TrivialAlgebra(f"{what} is undefined for the one-element algebra")


def is_simple_by_filters(L: ResiduatedLattice) -> bool:
    return [F.mask for F in all_filters(L)] == [1 << L.top, (1 << L.n) - 1]


def is_simple_by_order(L: ResiduatedLattice) -> Verdict:
    """Every a != 1 has finite order."""
    return _first((a,) for a in L.elements if a != L.top and not L.order_of(a).finite)


def is_simple(L: ResiduatedLattice) -> Verdict:
    _nontrivial(L, "simple")
    by_order = is_simple_by_order(L)
    if by_order.holds != is_simple_by_filters(L):
        raise InvariantViolation(f"{L.name}: simplicity via filters and via orders disagree")
    return by_order


def is_local(L: ResiduatedLattice) -> bool:
    """Exactly one maximal filter; the local-algebra facts are checked on the way."""
    _nontrivial(L, "local")
    maxes = maximal_filters(L)
    local = len(maxes) == 1
    if local:
        (M,) = maxes
        if M.members != order_infinite_elements(L):
            raise InvariantViolation(f"{L.name}: local, but the maximal filter is not D(A)")
        if boolean_center(L) != {L.bottom, L.top}:
            raise InvariantViolation(f"{L.name}: local, but B(A) != {{0,1}}")
        for a in L.elements:
            if not (L.order_of(a).finite or L.order_of(L.neg(a)).finite):
                raise InvariantViolation(f"{L.name}: local, but ord({L.label(a)}) and ord(-{L.label(a)}) infinite")
    return local


def is_semilocal(L: ResiduatedLattice) -> bool:
    _nontrivial(L, "semilocal")
    # finitely many maximal filters, always, for a finite algebra
    return len(maximal_filters(L)) < float("inf")


def quasi_local_violation(L: ResiduatedLattice) -> Optional[int]:
    """Least a for which no central e and n give a^n * e = 0 and (-a)^n * -e = 0.

    Both products shrink as n grows, so the settled powers decide; one common
    n can then be taken as the larger of the two settling points.
    """
    center = sorted(boolean_center(L))
    for a in L.elements:
        an = L.stable_power(a)
        nan = L.stable_power(L.neg(a))
        if not any(
            L.prod[an][e] == L.bottom and L.prod[nan][L.neg(e)] == L.bottom for e in center
        ):
            return a
    return None


def is_quasi_local(L: ResiduatedLattice) -> Verdict:
    bad = quasi_local_violation(L)
    return Verdict(True) if bad is None else Verdict(False, (bad,))


# -- report ------------------------------------------------------------------


@dataclass
class ClassificationReport:
    name: str
    n: int
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    derived: dict = field(default_factory=dict)
    conditional: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "conditional": self.conditional,
            "derived": self.derived,
        }


_IMPLICATIONS = (
    ("mv", "bl"),
    ("bl", "mtl"),
    ("imtl", "mtl"),
    ("imtl", "involutive"),
    ("mv", "involutive"),
    ("involutive", "glivenko"),
    ("bl", "glivenko"),
    ("bl", "star_equation"),
    ("simple", "local"),
    ("local", "semilocal"),
    ("local", "quasi_local"),
    ("bl", "lifting_boolean_center"),
    ("mv", "lifting_boolean_center"),
)


def classification_report(L: ResiduatedLattice) -> ClassificationReport:
    """Run every predicate, assert the implications between classes and the
    quotient-preservation facts, and collect the derived sets."""
    from reslat.quotients import dense_quotient, has_lifting_boolean_center, quotient

    report = ClassificationReport(L.name, L.n)
    v, w = report.verdicts, report.witnesses

    def record(key, verdict):
        v[key] = bool(verdict)
        if isinstance(verdict, Verdict) and not verdict.holds:
            w[key] = [L.label(x) for x in verdict.witness]

    record("mtl", is_mtl(L))
    record("imtl", is_imtl(L))
    record("bl", is_bl(L))
    record("mv", is_mv(L))
    record("involutive", is_involutive(L))
    record("glivenko", is_glivenko(L))
    record("star_equation", star_equation(L))
    if L.n == 1:
        for key in ("simple", "local", "semilocal"):
            v[key] = TRIVIAL
    else:
        record("simple", is_simple(L))
        v["local"] = is_local(L)
        v["semilocal"] = is_semilocal(L)
    record("quasi_local", is_quasi_local(L))
    v["lifting_boolean_center"] = has_lifting_boolean_center(L)
    dq = dense_quotient(L).algebra
    v["dense_quotient_quasi_local"] = is_quasi_local(dq).holds
    v["dense_quotient_involutive"] = dq.is_involutive()

    for a, b in _IMPLICATIONS:
        if v.get(a) is True and v.get(b) is False:
            raise InvariantViolation(f"{L.name}: {a} holds but {b} fails")
    if v["glivenko"] != v["dense_quotient_involutive"]:
        raise InvariantViolation(f"{L.name}: Glivenko != A/Ds involutive")
    if v["quasi_local"]:
        for F in all_filters(L):
            if not is_quasi_local(quotient(L, F).algebra):
                raise InvariantViolation(f"{L.name}: quasi-local not inherited by A/{F!r}")
    # recorded rather than asserted: both fail on the seven-element corpus algebra
    gs = v["glivenko"] and v["star_equation"]
    report.conditional = {
        "glivenko+star => lifting": v["lifting_boolean_center"] if gs else None,
        "glivenko+star, A/Ds quasi-local => quasi-local": (
            v["quasi_local"] if gs and v["dense_quotient_quasi_local"] else None
        ),
    }

    filters = all_filters(L)
    report.derived = {
        "elements": list(L.names),
        "filters": [F.names for F in filters],
        "|filters|": len(filters),
        "|Spec|": len(prime_filters(L)),
        "|Max|": len(maximal_filters(L)),
        "maximal filters": [M.names for M in maximal_filters(L)],
        "Ds": dense_elements(L).names,
        "Rad": radical(L).names,
        "B": L.labels(boolean_center(L)),
        "D": L.labels(order_infinite_elements(L)),
        "Reg": L.labels(regular_elements(L)),
    }
    return report
