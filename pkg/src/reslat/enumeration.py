"""Exhaustive enumeration of small residuated lattices and counterexample hunting.

Lattices come out naturally labelled (``a <= b`` implies ``a <= b`` as
indices), bottom first and top last, deduplicated by the least leq encoding
over all natural relabellings. Monoids are found per lattice by the kernel
search and deduplicated by the least prod table over lattice automorphisms.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from reslat import kernels
from reslat.algebra import ResiduatedLattice, from_tables
from reslat.corpus import save
from reslat.errors import CapExceeded, ParseError

DEFAULT_SIZE_CAP = 5
CHAIN_SIZE_CAP = 6
SIZE_CAP_ENV = "RESLAT_SIZE_CAP"


def size_cap(chains_only: bool = False) -> int:
    env = os.environ.get(SIZE_CAP_ENV)
    if env:
        return int(env)
    return CHAIN_SIZE_CAP if chains_only else DEFAULT_SIZE_CAP


def _check_cap(n: int, chains_only: bool = False) -> None:
    cap = size_cap(chains_only)
    if n > cap:
        raise CapExceeded("enumeration", n, cap)
    if n < 1:
        raise ValueError("size must be positive")


def element_names(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("0",)
    middle = [chr(ord("a") + i) for i in range(n - 2)]
    return ("0", *middle, "1")


# -- lattices ---------------------------------------------------------------


@dataclass(frozen=True)
class FiniteLattice:
    n: int
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    @property
    def is_chain(self) -> bool:
        return all(self.leq[a][b] or self.leq[b][a] for a in range(self.n) for b in range(self.n))


def _bound(n, leq, a, b, upper):
    cands = [c for c in range(n) if (leq[a][c] and leq[b][c] if upper else leq[c][a] and leq[c][b])]
    for c in cands:
        if all((leq[c][d] if upper else leq[d][c]) for d in cands):
            return c
    return None


def _lattice_from_leq(n, leq) -> Optional[FiniteLattice]:
    join, meet = [], []
    for a in range(n):
        jrow, mrow = [], []
        for b in range(n):
            j = _bound(n, leq, a, b, True)
            m = _bound(n, leq, a, b, False)
            if j is None or m is None:
                return None
            jrow.append(j)
            mrow.append(m)
        join.append(tuple(jrow))
        meet.append(tuple(mrow))
    return FiniteLattice(n, tuple(tuple(r) for r in leq), tuple(join), tuple(meet))


def _bounded_posets(n: int) -> Iterator[list[list[bool]]]:
    """Naturally labelled posets with 0 least and n-1 greatest."""
    k = n - 2
    below: list[int] = []  # strict down-set of each middle element, as bitmask over middles

    def walk(i):
        if i == k:
            leq = [[a == b for b in range(n)] for a in range(n)]
            for a in range(n):
                leq[0][a] = leq[a][n - 1] = True
            for j, mask in enumerate(below):
                for m in range(k):
                    if mask >> m & 1:
                        leq[m + 1][j + 1] = True
            yield leq
            return
        # down-sets of the poset on middles 0..i-1
        for mask in range(1 << i):
            if all(below[m] & ~mask == 0 for m in range(i) if mask >> m & 1):
                below.append(mask)
                yield from walk(i + 1)
                below.pop()

    yield from walk(0)


def _encode(leq, perm) -> int:
    """Bit-encoding of ``leq`` relabelled by ``perm`` (old index -> new index)."""
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    code = 0
    for a in range(n):
        for b in range(n):
            code = code << 1 | leq[inv[a]][inv[b]]
    return code


def _natural_perms(n, leq) -> Iterator[tuple[int, ...]]:
    """Relabellings (old -> new) that keep the labelling natural."""
    for mid in itertools.permutations(range(1, n - 1)):
        perm = (0, *mid, n - 1)
        if all(perm[a] <= perm[b] for a in range(n) for b in range(n) if leq[a][b]):
            yield perm


def _relabel_leq(leq, perm):
    n = len(perm)
    out = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = leq[a][b]
    return out


def enumerate_lattices(n: int, chains_only: bool = False) -> list[FiniteLattice]:
    """All bounded lattices on ``n`` elements up to isomorphism, in canonical order."""
    _check_cap(n, chains_only)
    if n == 1:
        return [FiniteLattice(1, ((True,),), ((0,),), ((0,),))]
    if chains_only:
        leq = [[a <= b for b in range(n)] for a in range(n)]
        return [_lattice_from_leq(n, leq)]
    seen: dict[int, FiniteLattice] = {}
    for leq in _bounded_posets(n):
        L = _lattice_from_leq(n, leq)
        if L is None:
            continue
        best = min(_natural_perms(n, leq), key=lambda p: _encode(leq, p))
        code = _encode(leq, best)
        if code not in seen:
            seen[code] = _lattice_from_leq(n, _relabel_leq(leq, best))
    # larger code first puts the chain (all-upper-triangular leq) first
    return [seen[c] for c in sorted(seen, reverse=True)]


def lattice_automorphisms(L: FiniteLattice) -> list[tuple[int, ...]]:
    n = L.n
    out = []
    for mid in itertools.permutations(range(1, n - 1)):
        perm = (0, *mid, n - 1) if n > 1 else (0,)
        if all(L.leq[perm[a]][perm[b]] == L.leq[a][b] for a in range(n) for b in range(n)):
            out.append(perm)
    return out


# -- residuated lattices ------------------------------------------------------


def _canonical_prod(prod, autos):
    n = len(prod)
    best = None
    for p in autos:
        inv = [0] * n
        for old, new in enumerate(p):
            inv[new] = old
        t = tuple(tuple(p[prod[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best


def monoids_on(L: FiniteLattice) -> list[tuple[tuple[int, ...], ...]]:
    """Residuated monoid tables on ``L`` up to lattice automorphism, sorted."""
    if L.n == 1:
        return [((0,),)]
    found = kernels.search_monoids(L.n, L.leq, L.join, L.meet, L.bottom, L.top)
    autos = lattice_automorphisms(L)
    return sorted({_canonical_prod(p, autos) for p in found})


def _algebras_for_lattice(args) -> list[ResiduatedLattice]:
    n, li, L = args
    names = element_names(n)
    return [
        from_tables(f"N{n}L{li}M{mi}", names, L.join, L.meet, prod, L.bottom, L.top, cap=max(n, 8))
        for mi, prod in enumerate(monoids_on(L), start=1)
    ]


def enumerate_residuated(
    n: int, chains_only: bool = False, workers: int = 1
) -> Iterator[ResiduatedLattice]:
    """Every residuated lattice on ``n`` elements up to isomorphism, validated.

    Deterministic: lattices in canonical order, then monoid tables in
    lexicographic order. ``workers > 1`` splits the lattices over processes;
    results are merged back in the same order.
    """
    _check_cap(n, chains_only)
    lattices = enumerate_lattices(n, chains_only)
    tasks = [(n, li, L) for li, L in enumerate(lattices, start=1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(_algebras_for_lattice, tasks):
                yield from batch
    else:
        for task in tasks:
            yield from _algebras_for_lattice(task)


def count_residuated(n: int, chains_only: bool = False) -> int:
    return sum(1 for _ in enumerate_residuated(n, chains_only))


def write_algebras(algebras: Iterable[ResiduatedLattice], directory) -> list[Path]:
    """Save each algebra as ``<name>.json`` in ``directory`` (created if missing)."""
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for L in algebras:
        path = out_dir / f"{L.name}.json"
        save(path, L.to_spec())
        paths.append(path)
    return paths


# -- predicates and hunting -------------------------------------------------


def _dense_quotient_commutes(L):
    from reslat.filters import all_filters
    from reslat.quotients import dense_quotient_comparison

    for F in all_filters(L):
        c = dense_quotient_comparison(L, F)
        if not c.equal:
            return False, tuple(sorted(F.members))
    return True, None


def _glivenko_lifting_equivalence(L):
    from reslat.quotients import lifting_diagram

    eq = lifting_diagram(L).glivenko_equivalence
    return eq is not False


def _vocabulary() -> dict[str, Callable[[ResiduatedLattice], object]]:
    from reslat import classify as c
    from reslat.quotients import dense_quotient, has_lifting_boolean_center

    return {
        "mtl": c.is_mtl,
        "imtl": c.is_imtl,
        "bl": c.is_bl,
        "mv": c.is_mv,
        "involutive": c.is_involutive,
        "glivenko": c.is_glivenko,
        "star_equation": c.star_equation,
        "simple": c.is_simple,
        "local": c.is_local,
        "semilocal": c.is_semilocal,
        "quasi_local": c.is_quasi_local,
        "lifting_boolean_center": has_lifting_boolean_center,
        "dense_quotient_quasi_local": lambda L: c.is_quasi_local(dense_quotient(L).algebra).holds,
        "dense_quotient_commutes": _dense_quotient_commutes,
        "glivenko_lifting_equivalence": _glivenko_lifting_equivalence,
    }


PREDICATES = (
    "mtl", "imtl", "bl", "mv", "involutive", "glivenko", "star_equation",
    "simple", "local", "semilocal", "quasi_local", "lifting_boolean_center",
    "dense_quotient_quasi_local", "dense_quotient_commutes",
    "glivenko_lifting_equivalence",
)


def evaluate(name: str, L: ResiduatedLattice) -> tuple[bool, Optional[tuple]]:
    """Evaluate a vocabulary predicate; a leading ``!`` negates it."""
    negate = name.startswith("!")
    key = name[1:] if negate else name
    vocab = _vocabulary()
    if key not in vocab:
        raise ParseError(f"unknown predicate {key!r}; known: {', '.join(PREDICATES)}")
    raw = vocab[key](L)
    if isinstance(raw, tuple) and len(raw) == 2:
        holds, witness = bool(raw[0]), raw[1]
    else:
        holds, witness = bool(raw), None
    if negate:
        return not holds, None
    return holds, witness


@dataclass(frozen=True)
class Found:
    algebra: ResiduatedLattice
    size: int
    witness: Optional[tuple]

    def describe(self) -> str:
        w = ""
        if self.witness is not None:
            w = f", witness ({', '.join(self.algebra.label(x) for x in self.witness)})"
        return f"counterexample {self.algebra.name} at size {self.size}{w}"


@dataclass(frozen=True)
class Exhausted:
    size: int

    def describe(self) -> str:
        return f"exhausted: no counterexample up to size {self.size}"


HuntResult = Union[Found, Exhausted]


def parse_hunt(text: str) -> tuple[list[str], str]:
    """``"p1,p2=>q"`` into antecedents and consequent; ``"=>q"`` has none."""
    if "=>" not in text:
        raise ParseError(f"hunt spec {text!r} needs the form 'p1,p2=>q'")
    left, right = text.split("=>", 1)
    ante = [p.strip() for p in left.split(",") if p.strip()]
    cons = right.strip()
    for p in [*ante, cons]:
        if p.lstrip("!") not in PREDICATES:
            raise ParseError(f"unknown predicate {p!r}; known: {', '.join(PREDICATES)}")
    return ante, cons


def hunt(
    antecedents: Sequence[str],
    consequent: str,
    max_size: int,
    min_size: int = 2,
    chains_only: bool = False,
) -> HuntResult:
    """First algebra, by size then canonical order, satisfying every
    antecedent but not the consequent.

    The size cap is enforced only on sizes actually reached, so a search
    that succeeds below the cap does not need it raised.
    """
    for n in range(min_size, max_size + 1):
        for L in enumerate_residuated(n, chains_only):
            if not all(evaluate(p, L)[0] for p in antecedents):
                continue
            holds, witness = evaluate(consequent, L)
            if not holds:
                return Found(L, n, witness)
    return Exhausted(max_size)
