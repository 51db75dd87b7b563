"""Finite commutative residuated lattices.

Elements are indices ``0..n-1``; names are metadata. Tables are tuples of
tuples indexed ``table[left][right]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from reslat import kernels
from reslat.errors import (
    CapExceeded,
    InvariantViolation,
    LatticeAxiomViolation,
    MalformedSpec,
    MonoidAxiomViolation,
    NoResidual,
    NotAMorphism,
    NotClosed,
    NotComplemented,
    ResiduationViolation,
)

INFINITE = math.inf
DEFAULT_CAP = 64

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AlgebraSpec:
    """Raw named tables, as read from a file or the built-in corpus."""

    name: str
    elements: tuple[str, ...]
    join: tuple[tuple[str, ...], ...]
    meet: tuple[tuple[str, ...], ...]
    prod: tuple[tuple[str, ...], ...]
    bottom: str
    top: str
    imp: Optional[tuple[tuple[str, ...], ...]] = None

    def __post_init__(self):
        # accept lists from callers, store tuples
        object.__setattr__(self, "elements", tuple(self.elements))
        for key in ("join", "meet", "prod", "imp"):
            table = getattr(self, key)
            if table is not None:
                object.__setattr__(self, key, tuple(tuple(row) for row in table))


@dataclass(frozen=True, eq=False)
class ResiduatedLattice:
    """A validated finite residuated lattice. Build it with :func:`validate`."""

    name: str
    names: tuple[str, ...]
    join: Table
    meet: Table
    prod: Table
    imp: Table
    bottom: int
    top: int
    leq: tuple[tuple[bool, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise MalformedSpec(f"{self.name}: no element named {name!r}") from None

    def label(self, a: int) -> str:
        return self.names[a]

    def labels(self, items) -> list[str]:
        return [self.names[a] for a in sorted(items)]

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self.imp[a][self.bottom] for a in range(self.n))

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def biimp(self, a: int, b: int) -> int:
        return self.meet[self.imp[a][b]][self.imp[b][a]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("power exponent must be >= 0")
        result = self.top
        for _ in range(k):
            result = self.prod[result][a]
        return result

    def power_trace(self, a: int) -> list[int]:
        """Distinct powers a, a^2, ... stopping at 0 or at the first repeat."""
        trace = [a]
        while trace[-1] != self.bottom:
            nxt = self.prod[trace[-1]][a]
            if nxt == trace[-1]:
                break
            trace.append(nxt)
        return trace

    def stable_power(self, a: int) -> int:
        """The value at which a^k settles for all large k."""
        return self.power_trace(a)[-1]

    def order_of(self, a: int) -> "ElementOrder":
        trace = self.power_trace(a)
        ordv = len(trace) if trace[-1] == self.bottom else INFINITE
        return ElementOrder(a, ordv, tuple(trace))

    def ord(self, a: int):
        return self.order_of(a).ord

    def is_involutive(self) -> bool:
        return all(self.neg(self.neg(a)) == a for a in self.elements)

    def subset_mask(self, items) -> int:
        return sum(1 << a for a in set(items))

    def to_spec(self) -> AlgebraSpec:
        nm = self.names

        def named(t):
            return tuple(tuple(nm[x] for x in row) for row in t)

        return AlgebraSpec(
            name=self.name,
            elements=nm,
            join=named(self.join),
            meet=named(self.meet),
            prod=named(self.prod),
            imp=named(self.imp),
            bottom=nm[self.bottom],
            top=nm[self.top],
        )

    def tables_equal(self, other: "ResiduatedLattice") -> bool:
        return (
            self.n == other.n
            and self.join == other.join
            and self.meet == other.meet
            and self.prod == other.prod
            and self.imp == other.imp
            and self.bottom == other.bottom
            and self.top == other.top
        )

    def __repr__(self) -> str:
        return f"ResiduatedLattice({self.name!r}, n={self.n})"


@dataclass(frozen=True)
class ElementOrder:
    element: int
    ord: float | int
    power_trace: tuple[int, ...]

    @property
    def finite(self) -> bool:
        return self.ord != INFINITE


def _index_tables(spec: AlgebraSpec):
    names = spec.elements
    if len(set(names)) != len(names):
        raise MalformedSpec(f"{spec.name}: duplicate element names")
    if not names:
        raise MalformedSpec(f"{spec.name}: empty carrier")
    idx = {x: i for i, x in enumerate(names)}
    n = len(names)

    def lookup(x, where):
        try:
            return idx[x]
        except (KeyError, TypeError):
            raise MalformedSpec(f"{spec.name}: {where} names unknown element {x!r}") from None

    def convert(key, table):
        if len(table) != n:
            raise MalformedSpec(f"{spec.name}: table {key} has {len(table)} rows, expected {n}")
        rows = []
        for r, row in enumerate(table):
            if len(row) != n:
                raise MalformedSpec(
                    f"{spec.name}: table {key} row {r} has {len(row)} entries, expected {n}"
                )
            rows.append(tuple(lookup(x, f"{key}[{r}]") for x in row))
        return tuple(rows)

    tables = {k: convert(k, getattr(spec, k)) for k in ("join", "meet", "prod")}
    tables["imp"] = convert("imp", spec.imp) if spec.imp is not None else None
    return (
        n,
        tables,
        lookup(spec.bottom, "bottom"),
        lookup(spec.top, "top"),
    )


def _check_lattice(n, join, meet, bottom, top, names):
    def fail(axiom, *xs):
        raise LatticeAxiomViolation(axiom, [names[x] for x in xs])

    for a in range(n):
        if join[bottom][a] != a or meet[bottom][a] != bottom:
            fail("bottom is least", a)
        if join[top][a] != top or meet[top][a] != a:
            fail("top is greatest", a)
        for b in range(n):
            if join[a][b] != join[b][a]:
                fail("join commutative", a, b)
            if meet[a][b] != meet[b][a]:
                fail("meet commutative", a, b)
            if join[a][meet[a][b]] != a:
                fail("absorption a v (a ^ b) = a", a, b)
            if meet[a][join[a][b]] != a:
                fail("absorption a ^ (a v b) = a", a, b)
            if (join[a][b] == b) != (meet[a][b] == a):
                fail("join order agrees with meet order", a, b)
    for op, label in ((join, "join associative"), (meet, "meet associative")):
        bad = kernels.find_associativity_violation(n, op)
        if bad is not None:
            fail(label, *bad)


def _check_monoid(n, prod, top, names):
    def fail(axiom, *xs):
        raise MonoidAxiomViolation(axiom, [names[x] for x in xs])

    for a in range(n):
        if prod[a][top] != a:
            fail("top is unit", a)
        for b in range(n):
            if prod[a][b] != prod[b][a]:
                fail("prod commutative", a, b)
    bad = kernels.find_associativity_violation(n, prod)
    if bad is not None:
        fail("prod associative", *bad)


def validate(spec: AlgebraSpec, cap: int = DEFAULT_CAP) -> ResiduatedLattice:
    """Check every axiom and return the index-based algebra.

    A missing ``imp`` table is derived as the residual of ``prod``; a given
    one must satisfy residuation entry by entry.
    """
    if len(spec.elements) > cap:
        raise CapExceeded("validate", len(spec.elements), cap)
    n, tables, bottom, top = _index_tables(spec)
    names = spec.elements
    join, meet, prod = tables["join"], tables["meet"], tables["prod"]
    _check_lattice(n, join, meet, bottom, top, names)
    leq = tuple(tuple(join[a][b] == b for b in range(n)) for a in range(n))
    _check_monoid(n, prod, top, names)
    imp = tables["imp"]
    if imp is None:
        imp, bad = kernels.residual_table(n, leq, prod)
        if bad is not None:
            raise NoResidual("residual exists", [names[x] for x in bad])
        # a maximum can exist without {a : a*b <= c} being a down-set
        bad = kernels.find_residuation_violation(n, leq, prod, imp)
        if bad is not None:
            raise NoResidual("a <= b->c iff a*b <= c", [names[x] for x in bad])
    else:
        bad = kernels.find_residuation_violation(n, leq, prod, imp)
        if bad is not None:
            raise ResiduationViolation(
                "a <= b->c iff a*b <= c", [names[x] for x in bad]
            )
    return ResiduatedLattice(
        name=spec.name,
        names=tuple(names),
        join=join,
        meet=meet,
        prod=prod,
        imp=imp,
        bottom=bottom,
        top=top,
        leq=leq,
    )


def from_tables(name, names, join, meet, prod, bottom, top, imp=None, cap=DEFAULT_CAP):
    """Validate index tables directly (used by constructions and enumeration)."""
    nm = tuple(names)

    def named(t):
        return None if t is None else tuple(tuple(nm[x] for x in row) for row in t)

    return validate(
        AlgebraSpec(
            name=name,
            elements=nm,
            join=named(join),
            meet=named(meet),
            prod=named(prod),
            imp=named(imp),
            bottom=nm[bottom],
            top=nm[top],
        ),
        cap=cap,
    )


# -- Boolean center ---------------------------------------------------------


def boolean_center(L: ResiduatedLattice) -> frozenset[int]:
    """Complemented elements, found as ``{e : e v -e = 1}``.

    Closure under join/meet/negation, the Boolean-algebra laws and
    ``e*e = e = --e`` are checked on the way out.
    """
    center = frozenset(e for e in L.elements if L.join[e][L.neg(e)] == L.top)
    for e in center:
        if L.prod[e][e] != e or L.neg(L.neg(e)) != e:
            raise InvariantViolation(f"{L.name}: central {L.label(e)} not idempotent/regular")
        if L.neg(e) not in center:
            raise InvariantViolation(f"{L.name}: center not closed under negation")
        for f in center:
            if L.join[e][f] not in center or L.meet[e][f] not in center:
                raise InvariantViolation(f"{L.name}: center not closed under join/meet")
            for g in center:
                if L.meet[e][L.join[f][g]] != L.join[L.meet[e][f]][L.meet[e][g]]:
                    raise InvariantViolation(f"{L.name}: center not distributive")
        if L.meet[e][L.neg(e)] != L.bottom:
            raise InvariantViolation(f"{L.name}: -{L.label(e)} is not a complement")
    return center


def lattice_complemented(L: ResiduatedLattice) -> frozenset[int]:
    """Elements with a lattice complement, searched directly (oracle for the center)."""
    return frozenset(
        e
        for e in L.elements
        if any(L.join[e][f] == L.top and L.meet[e][f] == L.bottom for f in L.elements)
    )


def complement(L: ResiduatedLattice, e: int) -> int:
    if L.join[e][L.neg(e)] != L.top:
        raise NotComplemented(f"{L.label(e)} is not in the Boolean center of {L.name}")
    return L.neg(e)


# -- constructions ----------------------------------------------------------


def direct_product(L1: ResiduatedLattice, L2: ResiduatedLattice, name=None) -> ResiduatedLattice:
    n1, n2 = L1.n, L2.n
    pairs = [(i, j) for i in range(n1) for j in range(n2)]

    def lift(t1, t2):
        return tuple(
            tuple(t1[a][c] * n2 + t2[b][d] for (c, d) in pairs) for (a, b) in pairs
        )

    names = [f"({L1.names[i]},{L2.names[j]})" for i, j in pairs]
    return from_tables(
        name or f"{L1.name}x{L2.name}",
        names,
        lift(L1.join, L2.join),
        lift(L1.meet, L2.meet),
        lift(L1.prod, L2.prod),
        L1.bottom * n2 + L2.bottom,
        L1.top * n2 + L2.top,
        imp=lift(L1.imp, L2.imp),
    )


_OPS = (("join", "∨"), ("meet", "∧"), ("prod", "⊙"), ("imp", "→"))


def subalgebra(L: ResiduatedLattice, subset, name=None) -> ResiduatedLattice:
    """The induced algebra on ``subset``; elements keep their relative order."""
    members = sorted(set(subset))
    inside = set(members)
    for const in (L.bottom, L.top):
        if const not in inside:
            raise NotClosed("constants", L.label(const), L.label(const))
    for key, symbol in _OPS:
        t = getattr(L, key)
        for a in members:
            for b in members:
                if t[a][b] not in inside:
                    raise NotClosed(symbol, L.label(a), L.label(b))
    pos = {x: i for i, x in enumerate(members)}

    def restrict(t):
        return tuple(tuple(pos[t[a][b]] for b in members) for a in members)

    return from_tables(
        name or f"{L.name}|{{{','.join(L.labels(members))}}}",
        [L.names[x] for x in members],
        restrict(L.join),
        restrict(L.meet),
        restrict(L.prod),
        pos[L.bottom],
        pos[L.top],
        imp=restrict(L.imp),
    )


def is_closed_subset(L: ResiduatedLattice, subset) -> bool:
    try:
        subalgebra(L, subset)
    except NotClosed:
        return False
    return True


def all_subalgebras(L: ResiduatedLattice) -> list[frozenset[int]]:
    """Carriers of every subalgebra (subsets holding 0 and 1, closed under all ops)."""
    rest = [x for x in L.elements if x not in (L.bottom, L.top)]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            s = {L.bottom, L.top, *combo}
            if all(
                getattr(L, key)[a][b] in s for key, _ in _OPS for a in s for b in s
            ):
                out.append(frozenset(s))
    return out


def boolean_center_algebra(L: ResiduatedLattice) -> ResiduatedLattice:
    return subalgebra(L, boolean_center(L), name=f"B({L.name})")


# -- morphisms --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Morphism:
    """A carrier map that has been checked to preserve all operations."""

    source: ResiduatedLattice
    target: ResiduatedLattice
    map: tuple[int, ...]
    name: str = "f"

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        bad = morphism_violation(self.source, self.target, self.map)
        if bad is not None:
            raise NotAMorphism(f"{self.name}: {bad}")

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)

    @property
    def is_isomorphism(self) -> bool:
        return self.injective and self.surjective

    def image(self, items) -> frozenset[int]:
        return frozenset(self.map[a] for a in items)

    def compose(self, other: "Morphism") -> "Morphism":
        """``other`` after ``self``."""
        return Morphism(
            self.source, other.target, tuple(other.map[x] for x in self.map),
            name=f"{other.name}.{self.name}",
        )

    def describe(self) -> dict:
        s, t = self.source, self.target
        return {
            "name": self.name,
            "map": {s.label(a): t.label(self.map[a]) for a in s.elements},
            "injective": self.injective,
            "surjective": self.surjective,
        }


def morphism_violation(S: ResiduatedLattice, T: ResiduatedLattice, f) -> Optional[str]:
    """First failure of ``f`` to be a morphism, or None."""
    if len(f) != S.n or any(not 0 <= y < T.n for y in f):
        return "map is not a function between the carriers"
    if f[S.bottom] != T.bottom:
        return "0 not preserved"
    if f[S.top] != T.top:
        return "1 not preserved"
    for key, symbol in _OPS:
        ts, tt = getattr(S, key), getattr(T, key)
        for a in S.elements:
            for b in S.elements:
                if f[ts[a][b]] != tt[f[a]][f[b]]:
                    return f"{symbol} not preserved at ({S.label(a)}, {S.label(b)})"
    return None


def identity(L: ResiduatedLattice) -> Morphism:
    return Morphism(L, L, tuple(L.elements), name="id")


def find_isomorphism(L1: ResiduatedLattice, L2: ResiduatedLattice, limit: int = 8):
    """Backtracking search for an isomorphism; returns the map or None.

    Meant as an oracle on small algebras, hence the size limit.
    """
    if L1.n != L2.n:
        return None
    n = L1.n
    if n > limit:
        raise CapExceeded("find_isomorphism", n, limit)

    def signature(L, a):
        below = sum(L.leq[x][a] for x in L.elements)
        above = sum(L.leq[a][x] for x in L.elements)
        return (below, above, len(L.power_trace(a)), L.neg(a) == a)

    sig2 = {b: signature(L2, b) for b in L2.elements}
    cands = [[b for b in L2.elements if sig2[b] == signature(L1, a)] for a in L1.elements]
    f = [-1] * n
    used = [False] * n

    def ok_partial(a):
        for key, _ in _OPS:
            t1, t2 = getattr(L1, key), getattr(L2, key)
            for b in range(a + 1):
                for x, y in ((a, b), (b, a)):
                    z = t1[x][y]
                    if z <= a and f[z] != t2[f[x]][f[y]]:
                        return False
        return True

    def walk(a):
        if a == n:
            return True
        for b in cands[a]:
            if used[b]:
                continue
            f[a] = b
            used[b] = True
            if ok_partial(a) and walk(a + 1):
                return True
            used[b] = False
        f[a] = -1
        return False

    return tuple(f) if walk(0) else None


def isomorphic(L1: ResiduatedLattice, L2: ResiduatedLattice) -> bool:
    return find_isomorphism(L1, L2) is not None


def relabel(L: ResiduatedLattice, names: Sequence[str], name=None) -> ResiduatedLattice:
    return from_tables(
        name or L.name, names, L.join, L.meet, L.prod, L.bottom, L.top, imp=L.imp
    )
