"""Filters, prime and maximal spectra, dense elements and the radical.

Subsets of the carrier are bitmasks (bit ``a`` set iff element ``a`` is in).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from reslat import kernels
from reslat.algebra import ResiduatedLattice, boolean_center
from reslat.errors import CapExceeded, InvariantViolation, NotAFilter, NotProper, RadicalMismatch

FILTER_SCAN_CAP = int(os.environ.get("RESLAT_FILTER_CAP", "20"))


def members_of(mask: int) -> list[int]:
    out, a = [], 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for a in items:
        m |= 1 << a
    return m


def full_mask(L: ResiduatedLattice) -> int:
    return (1 << L.n) - 1


def is_filter_mask(L: ResiduatedLattice, mask: int) -> bool:
    """Nonempty, closed under prod, upward closed."""
    if not mask:
        return False
    mem = members_of(mask)
    for a in mem:
        for b in L.elements:
            if L.leq[a][b] and not mask >> b & 1:
                return False
        for b in mem:
            if not mask >> L.prod[a][b] & 1:
                return False
    return True


def is_deductive_system_mask(L: ResiduatedLattice, mask: int) -> bool:
    """Contains 1 and is closed under modus ponens."""
    if not mask >> L.top & 1:
        return False
    for a in members_of(mask):
        for b in L.elements:
            if mask >> L.imp[a][b] & 1 and not mask >> b & 1:
                return False
    return True


@dataclass(frozen=True)
class Filter:
    """A verified filter of ``algebra``. Equality and hashing use the mask only."""

    algebra: ResiduatedLattice
    mask: int

    def __post_init__(self):
        f = is_filter_mask(self.algebra, self.mask)
        d = is_deductive_system_mask(self.algebra, self.mask)
        if f != d:
            raise InvariantViolation(
                f"{self.algebra.name}: filter and deductive-system tests disagree on "
                f"{{{', '.join(self.algebra.labels(members_of(self.mask)))}}}"
            )
        if not f:
            raise NotAFilter(
                f"{{{', '.join(self.algebra.labels(members_of(self.mask)))}}} "
                f"is not a filter of {self.algebra.name}"
            )

    def __eq__(self, other):
        return isinstance(other, Filter) and self.algebra is other.algebra and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __le__(self, other: "Filter") -> bool:
        return self.mask & ~other.mask == 0

    @property
    def members(self) -> frozenset[int]:
        return frozenset(members_of(self.mask))

    @property
    def names(self) -> list[str]:
        return self.algebra.labels(self.members)

    @property
    def proper(self) -> bool:
        return self.mask != full_mask(self.algebra)

    @property
    def prime(self) -> bool:
        return is_prime(self.algebra, self)

    @property
    def maximal(self) -> bool:
        return is_maximal(self.algebra, self)

    @property
    def primary(self) -> Optional[bool]:
        return is_primary(self.algebra, self) if self.proper else None

    @property
    def quasi_primary(self) -> Optional[bool]:
        return is_quasi_primary(self.algebra, self) if self.proper else None

    def flags(self) -> dict:
        return {
            "proper": self.proper,
            "prime": self.prime,
            "maximal": self.maximal,
            "primary": self.primary,
            "quasi_primary": self.quasi_primary,
        }

    def __repr__(self):
        return f"Filter({{{', '.join(self.names)}}})"


def make_filter(L: ResiduatedLattice, items: Iterable[int]) -> Filter:
    return Filter(L, mask_of(items))


def _up(L: ResiduatedLattice, mask: int) -> int:
    out = mask
    for a in members_of(mask):
        for b in L.elements:
            if L.leq[a][b]:
                out |= 1 << b
    return out


def generated_filter(L: ResiduatedLattice, items: Iterable[int] = ()) -> Filter:
    """Least filter containing ``items``: close under prod and upward until stable."""
    mask = mask_of(items) | (1 << L.top)
    while True:
        mem = members_of(mask)
        grown = mask
        for a in mem:
            for b in mem:
                grown |= 1 << L.prod[a][b]
        grown = _up(L, grown)
        if grown == mask:
            return Filter(L, mask)
        mask = grown


def all_filters(L: ResiduatedLattice, cap: int = FILTER_SCAN_CAP) -> list[Filter]:
    """Every filter, ordered by size then mask."""
    return list(_all_filters(L, cap))


@lru_cache(maxsize=4096)
def _all_filters(L, cap):
    if L.n > cap:
        raise CapExceeded("all_filters", L.n, cap)
    return tuple(Filter(L, m) for m in kernels.filter_masks(L.n, L.leq, L.prod))


def is_prime(L: ResiduatedLattice, F: Filter) -> bool:
    if not F.proper:
        return False
    return all(
        a in F or b in F
        for a in L.elements
        for b in L.elements
        if L.join[a][b] in F
    )


def is_maximal(L: ResiduatedLattice, F: Filter) -> bool:
    """Proper, and adding any outside element generates the whole algebra."""
    if not F.proper:
        return False
    full = full_mask(L)
    return all(
        generated_filter(L, members_of(F.mask | (1 << a))).mask == full
        for a in L.elements
        if a not in F
    )


def prime_filters(L: ResiduatedLattice) -> list[Filter]:
    return [F for F in all_filters(L) if is_prime(L, F)]


def maximal_filters(L: ResiduatedLattice) -> list[Filter]:
    """Maximal elements among the proper filters (computed from the full list)."""
    proper = [F for F in all_filters(L) if F.proper]
    out = [F for F in proper if not any(F.mask != G.mask and F <= G for G in proper)]
    if any(not is_maximal(L, F) for F in out):
        raise InvariantViolation(f"{L.name}: maximality tests disagree")
    return out


# -- Stone topology ---------------------------------------------------------


@dataclass(frozen=True)
class SpectrumSpace:
    """A finite space of filters with opens S(X) = {P : X not inside P}.

    ``basis`` maps each element ``a`` to the point-index set S(a); ``opens``
    is the union-closure of the basis (the empty union included).
    """

    algebra: ResiduatedLattice
    points: tuple[Filter, ...]
    basis: tuple[frozenset[int], ...]
    opens: frozenset[frozenset[int]]

    def __len__(self):
        return len(self.points)

    def open_of(self, items: Iterable[int]) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for a in items:
            out |= self.basis[a]
        return out


def _space(L: ResiduatedLattice, points: list[Filter]) -> SpectrumSpace:
    basis = tuple(
        frozenset(i for i, P in enumerate(points) if a not in P) for a in L.elements
    )
    opens = {frozenset()}
    for b in basis:
        opens |= {o | b for o in opens}
    opens = frozenset(opens)
    everything = frozenset(range(len(points)))
    if everything not in opens:
        raise InvariantViolation(f"{L.name}: spectrum opens miss the whole space")
    for u in opens:
        for v in opens:
            if u & v not in opens or u | v not in opens:
                raise InvariantViolation(f"{L.name}: spectrum opens are not a topology")
    return SpectrumSpace(L, tuple(points), basis, opens)


def spectrum(L: ResiduatedLattice) -> SpectrumSpace:
    return _space(L, prime_filters(L))


def max_spectrum(L: ResiduatedLattice) -> SpectrumSpace:
    maxes = maximal_filters(L)
    primes = set(prime_filters(L))
    if not set(maxes) <= primes:
        raise InvariantViolation(f"{L.name}: a maximal filter is not prime")
    return _space(L, maxes)


def stone_open(L: ResiduatedLattice, items: Iterable[int]) -> frozenset[Filter]:
    """S(X): the prime filters that do not contain all of X."""
    X = mask_of(items)
    return frozenset(P for P in prime_filters(L) if X & ~P.mask)


def stone_open_max(L: ResiduatedLattice, items: Iterable[int]) -> frozenset[Filter]:
    X = mask_of(items)
    return frozenset(M for M in maximal_filters(L) if X & ~M.mask)


# -- dense elements and the radical ---------------------------------------


def dense_elements(L: ResiduatedLattice) -> Filter:
    return Filter(L, mask_of(a for a in L.elements if L.neg(a) == L.bottom))


def radical_by_intersection(L: ResiduatedLattice) -> int:
    mask = full_mask(L)
    for M in maximal_filters(L):
        mask &= M.mask
    return mask


def in_radical_by_formula(L: ResiduatedLattice, a: int) -> bool:
    """For every power a^n, some power of -(a^n) is 0.

    ``--(y^m) = 1`` is the same as ``y^m = 0``; powers are non-increasing, so
    scanning the distinct powers covers every exponent.
    """
    for an in L.power_trace(a):
        y = L.neg(an)
        if not any(L.neg(ym) == L.top for ym in L.power_trace(y)):
            return False
    return True


def radical_by_formula(L: ResiduatedLattice) -> int:
    return mask_of(a for a in L.elements if in_radical_by_formula(L, a))


def radical(L: ResiduatedLattice) -> Filter:
    by_max = radical_by_intersection(L)
    by_formula = radical_by_formula(L)
    if by_max != by_formula:
        raise RadicalMismatch(
            f"{L.name}: intersection gives {L.labels(members_of(by_max))}, "
            f"formula gives {L.labels(members_of(by_formula))}"
        )
    R = Filter(L, by_max)
    if not dense_elements(L) <= R:
        raise InvariantViolation(f"{L.name}: Ds(A) is not inside Rad(A)")
    return R


def order_infinite_elements(L: ResiduatedLattice) -> frozenset[int]:
    """D(A): elements of infinite order."""
    return frozenset(a for a in L.elements if not L.order_of(a).finite)


# -- primary and quasi-primary filters -------------------------------------


def _require_proper(L, F):
    if not F.proper:
        raise NotProper(f"{F!r} is not a proper filter of {L.name}")


def primary_violation(L: ResiduatedLattice, F: Filter) -> Optional[tuple[int, int]]:
    """Least (a, b) with -(a*b) in F but no n giving -(a^n) or -(b^n) in F.

    -(a^n) grows with n and F is an up-set, so the settled power decides the
    existential.
    """
    _require_proper(L, F)
    for a in L.elements:
        na = L.neg(L.stable_power(a))
        for b in L.elements:
            if L.neg(L.prod[a][b]) in F and na not in F and L.neg(L.stable_power(b)) not in F:
                return (a, b)
    return None


def is_primary(L: ResiduatedLattice, F: Filter) -> bool:
    return primary_violation(L, F) is None


def quasi_primary_violation(L: ResiduatedLattice, F: Filter) -> Optional[tuple[int, int]]:
    """Least (a, b) with -(a*b) in F and no u, n meeting the three conditions.

    u ranges over the whole carrier with ``u v -u`` required central; n is
    taken at the settled powers (both conditions only get easier as n grows).
    """
    _require_proper(L, F)
    center = boolean_center(L)
    us = [u for u in L.elements if L.join[u][L.neg(u)] in center]
    for a in L.elements:
        an = L.stable_power(a)
        for b in L.elements:
            if L.neg(L.prod[a][b]) not in F:
                continue
            bn = L.stable_power(b)
            if not any(
                L.neg(L.prod[an][u]) in F and L.neg(L.prod[bn][L.neg(u)]) in F for u in us
            ):
                return (a, b)
    return None


def is_quasi_primary(L: ResiduatedLattice, F: Filter) -> bool:
    verdict = quasi_primary_violation(L, F) is None
    if not verdict and is_primary(L, F):
        raise InvariantViolation(f"{L.name}: {F!r} is primary but not quasi-primary")
    return verdict
