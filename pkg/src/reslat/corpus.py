"""Built-in example algebras, the algebra file format and Hasse-diagram export.

File format: one JSON object with fields ``name``, ``elements``, ``join``,
``meet``, ``prod``, optional ``imp``, ``bottom`` and ``top``. Tables are
row-major lists of element names, the row being the left operand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from reslat.algebra import AlgebraSpec, ResiduatedLattice, validate
from reslat.errors import ParseError, UnknownKey

FIELDS = ("name", "elements", "join", "meet", "prod", "imp", "bottom", "top")
TABLES = ("join", "meet", "prod", "imp")


# -- serialization ----------------------------------------------------------


def dumps(spec: AlgebraSpec) -> str:
    """Serialize with one table row per line so diffs stay readable."""
    parts = [f'  "name": {json.dumps(spec.name)}', f'  "elements": {json.dumps(list(spec.elements))}']
    for key in TABLES:
        table = getattr(spec, key)
        if table is None:
            continue
        rows = ",\n".join(f"    {json.dumps(list(row))}" for row in table)
        parts.append(f'  "{key}": [\n{rows}\n  ]')
    parts.append(f'  "bottom": {json.dumps(spec.bottom)}')
    parts.append(f'  "top": {json.dumps(spec.top)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _row_line(text: str, key: str, row: int) -> Optional[int]:
    """Line number of row ``row`` of table ``key`` in raw JSON text (best effort)."""
    start = text.find(f'"{key}"')
    if start < 0:
        return None
    pos = text.find("[", start)
    depth, seen = 0, -1
    i = pos
    while 0 <= i < len(text):
        ch = text[i]
        if ch == '"':
            # skip the string literal, honouring escapes
            i += 1
            while i < len(text) and text[i] != '"':
                i += 2 if text[i] == "\\" else 1
        elif ch == "[":
            depth += 1
            if depth == 2:
                seen += 1
                if seen == row:
                    return text.count("\n", 0, i) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
        i += 1
    return None


def loads(text: str) -> AlgebraSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    unknown = set(data) - set(FIELDS)
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    for key in FIELDS:
        if key != "imp" and key not in data:
            raise ParseError("missing field", field=key)

    name = data["name"]
    if not isinstance(name, str):
        raise ParseError("must be a string", field="name")
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("must be a list of strings", field="elements")
    if not elements:
        raise ParseError("carrier is empty", field="elements")
    if len(set(elements)) != len(elements):
        raise ParseError("duplicate element names", field="elements")
    known = set(elements)
    n = len(elements)

    for key in ("bottom", "top"):
        if data[key] not in known:
            raise ParseError(f"unknown element {data[key]!r}", field=key)

    for key in TABLES:
        table = data.get(key)
        if table is None:
            if key == "imp":
                continue
            raise ParseError("missing table", field=key)
        if not isinstance(table, list) or len(table) != n:
            raise ParseError(f"expected {n} rows", field=key)
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                got = len(row) if isinstance(row, list) else type(row).__name__
                raise ParseError(
                    f"row {r} has {got} entries, expected {n}",
                    field=key,
                    line=_row_line(text, key, r),
                )
            for x in row:
                if x not in known:
                    raise ParseError(
                        f"row {r} names unknown element {x!r}",
                        field=key,
                        line=_row_line(text, key, r),
                    )
    return AlgebraSpec(
        name=name,
        elements=elements,
        join=data["join"],
        meet=data["meet"],
        prod=data["prod"],
        imp=data.get("imp"),
        bottom=data["bottom"],
        top=data["top"],
    )


def load(path) -> AlgebraSpec:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(path, spec: AlgebraSpec) -> None:
    Path(path).write_text(dumps(spec), encoding="utf-8")


# -- Hasse diagrams ---------------------------------------------------------


def covering_pairs(L: ResiduatedLattice) -> list[tuple[int, int]]:
    """Pairs (a, b) with b covering a: a < b and nothing strictly between."""
    less = [[L.leq[a][b] and a != b for b in L.elements] for a in L.elements]
    return [
        (a, b)
        for a in L.elements
        for b in L.elements
        if less[a][b] and not any(less[a][c] and less[c][b] for c in L.elements)
    ]


def export_hasse(L: ResiduatedLattice, path=None) -> str:
    q = json.dumps
    lines = [f"digraph {q(L.name)} {{", "  rankdir=BT;", f"  {{ rank=source; {q(L.label(L.bottom))}; }}"]
    lines += [f"  {q(x)};" for x in L.names]
    lines += [f"  {q(L.label(a))} -> {q(L.label(b))};" for a, b in covering_pairs(L)]
    lines.append("}")
    doc = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(doc, encoding="utf-8")
    return doc


# -- built-in corpus ----------------------------------------------------------


@dataclass(frozen=True)
class Expectation:
    value: Any
    source: str  # "cited" (copied from the provenance citation), "claimed" or "derived"
    note: str = ""


@dataclass(frozen=True)
class CorpusEntry:
    key: str
    spec: AlgebraSpec
    provenance: str
    expected: dict = field(default_factory=dict)

    def algebra(self) -> ResiduatedLattice:
        return validate(self.spec)


_IORGULESCU = "A. Iorgulescu, Algebras of Logic as BCK Algebras (2008)"

_PROVENANCE = {
    "RL6D": f"{_IORGULESCU}, sec. 15.2.2; six elements, 0<a<b<c,d<1",
    "RL6C": f"{_IORGULESCU}, sec. 14.1.2; six-element IMTL chain that is not BL",
    "RL7Q": f"{_IORGULESCU}, sec. 16; seven elements, a<b, c<d, b,d<e<1",
    "BOOL2": "two-element Boolean algebra",
    "BOOL4": "four-element Boolean algebra (2x2)",
    "CHAIN3_LUK": "three-element Lukasiewicz chain",
    "CHAIN3_GODEL": "three-element Goedel chain",
    "CHAIN4_LUK": "four-element Lukasiewicz chain",
    "CHAIN4_GODEL": "four-element Goedel chain",
    "CHAIN5_DQ": "found by exhaustive enumeration (size 5): Ds(A/F) != Ds(A)/F at F={c,1}",
    "HEYTING5": "found by exhaustive enumeration (size 5): Glivenko and star equation, no lifting",
}

# Values copied from the cited presentations, plus one claimed value that the
# tables do not bear out (RL6D at F={d,1}).
_EXPECTED = {
    "RL6D": {
        "dense": Expectation(["c", "1"], "cited"),
        "neg b": Expectation("a", "cited"),
        "filter {d,1}": Expectation(["d", "1"], "cited"),
        "dense quotient differs at F={d,1}": Expectation(
            True,
            "claimed",
            "claimed to separate b/F from c/F, but b<->c = d lies in "
            "F={d,1}, so the computed congruence joins them",
        ),
    },
    "RL6C": {
        "dense": Expectation(["1"], "cited"),
        "mtl": Expectation(True, "cited"),
        "imtl": Expectation(True, "cited"),
        "bl": Expectation(False, "cited"),
        "divisibility witness": Expectation(["b", "a"], "cited"),
    },
    "RL7Q": {
        "dense": Expectation(["e", "1"], "cited"),
        "boolean center": Expectation(["0", "1"], "cited"),
        "quasi-local": Expectation(False, "cited"),
        "quasi-local witness": Expectation("a", "cited"),
        "dense quotient quasi-local": Expectation(True, "cited"),
        "dense quotient classes": Expectation([["0"], ["a", "b"], ["c", "d"], ["e", "1"]], "cited"),
    },
    "CHAIN5_DQ": {
        "dense quotient differs at F={c,1}": Expectation(True, "derived", "b/F is dense in A/F"),
    },
    "HEYTING5": {
        "lifting": Expectation(False, "derived", "|B(A)|=2, |B(A/Rad)|=4"),
    },
}

KEYS = tuple(_PROVENANCE)


def builtin(key: str) -> CorpusEntry:
    if key not in _PROVENANCE:
        raise UnknownKey(f"unknown corpus key {key!r}; known: {', '.join(KEYS)}")
    text = resources.files("reslat").joinpath("data", f"{key}.json").read_text(encoding="utf-8")
    return CorpusEntry(key, loads(text), _PROVENANCE[key], _EXPECTED.get(key, {}))


def builtin_algebra(key: str) -> ResiduatedLattice:
    return builtin(key).algebra()


def corpus() -> list[CorpusEntry]:
    return [builtin(k) for k in KEYS]


def corpus_file(key: str):
    """Path-like handle to the shipped file for ``key``."""
    if key not in _PROVENANCE:
        raise UnknownKey(key)
    return resources.files("reslat").joinpath("data", f"{key}.json")
