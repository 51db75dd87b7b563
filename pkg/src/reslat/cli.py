"""Command-line entry point: ``reslat <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 claim failure or
counterexample found, 3 I/O or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from reslat import corpus
from reslat.algebra import ResiduatedLattice, validate
from reslat.claims import FAIL, check_claims, recorded_dense_comparisons
from reslat.classify import classification_report
from reslat.enumeration import (
    Found,
    count_residuated,
    enumerate_residuated,
    hunt,
    parse_hunt,
    write_algebras,
)
from reslat.errors import (
    AxiomViolation,
    CapExceeded,
    MalformedSpec,
    ParseError,
    ReslatError,
    UnknownKey,
)
from reslat.filters import Filter, all_filters, generated_filter, mask_of, prime_filters
from reslat.quotients import lifting_diagram, quotient

EXIT_OK, EXIT_INVALID, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(data, fmt: str, human: str) -> None:
    if fmt == "structured":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(human, end="" if human.endswith("\n") else "\n")


def _set(names) -> str:
    return "{" + ", ".join(names) + "}"


def _load(args) -> tuple[ResiduatedLattice, Optional[str]]:
    if args.builtin and args.source:
        raise UsageError("give either a file or --builtin, not both")
    if args.builtin:
        return corpus.builtin_algebra(args.builtin), args.builtin
    if not args.source:
        raise UsageError("no algebra given: pass a file or --builtin KEY")
    return validate(corpus.load(args.source)), None


# -- commands -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    L, _ = _load(args)
    report = classification_report(L)
    D = lifting_diagram(L)
    filters = all_filters(L)
    data = report.as_dict()
    data["filters"] = [{"members": F.names, **F.flags()} for F in filters]
    data["|Spec|"] = len(prime_filters(L))
    data["lifting"] = D.summary()
    d = report.derived
    lines = [f"{L.name}: {L.n} elements {_set(L.names)}", ""]
    width = max(len(k) for k in report.verdicts)
    for k, v in report.verdicts.items():
        w = report.witnesses.get(k)
        lines.append(f"  {k:<{width}}  {v}" + (f"  (witness: {', '.join(w)})" if w else ""))
    for k, v in report.conditional.items():
        if v is not None:
            lines.append(f"  {k}: {'holds' if v else 'FAILS'}")
    lines += [
        "",
        f"Ds(A) = {_set(d['Ds'])}",
        f"Rad(A) = {_set(d['Rad'])}",
        f"B(A) = {_set(d['B'])}",
        f"D(A) = {_set(d['D'])}",
        f"Reg(A) = {_set(d['Reg'])}",
        f"|filters| = {d['|filters|']}",
        f"|Spec| = {d['|Spec|']}",
        f"|Max| = {d['|Max|']}",
        "",
        "filters:",
    ]
    for F in filters:
        flags = [k for k, v in F.flags().items() if v]
        lines.append(f"  {_set(F.names)}  {' '.join(flags)}")
    s = D.summary()
    lines += ["", f"lifting Boolean center: {s['lifting']} (|B(A)|={s['|B(A)|']}, |B(A/Rad)|={s['|B(A/Rad)|']})"]
    _emit(data, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_check_claims(args) -> int:
    L, key = _load(args)
    results = check_claims(L, key)
    counts = {s: sum(r.status == s for r in results) for s in ("PASS", "FAIL", "N-A")}
    comparisons = recorded_dense_comparisons(L, key)
    data = {"algebra": L.name, "results": [r.as_dict() for r in results], "counts": counts,
            "dense_quotient_comparisons": comparisons}
    human = "\n".join(r.line() for r in results)
    for c in comparisons:
        verdict = "differ" if c["differs"] else "coincide"
        human += (
            f"\n\nDs(A/F) vs Ds(A)/F at F={_set(c['filter'])}: {verdict}"
            f"\n  classes: {' '.join(_set(x) for x in c['classes'])}"
            f"\n  Ds(A/F) = {_set(c['Ds(A/F)'])}"
            f"\n  Ds(A)/F = {_set(c['Ds(A)/F'])}"
        )
        if c["diverges"]:
            human += f"\n  DIVERGES from the {c['source']} expectation ({'differ' if c['recorded'] else 'coincide'})"
    human += f"\n\n{counts['PASS']} pass, {counts['FAIL']} fail, {counts['N-A']} not applicable"
    _emit(data, args.format, human)
    return EXIT_CLAIM if counts[FAIL] else EXIT_OK


def _resolve_filter(L: ResiduatedLattice, text: str) -> tuple[Filter, bool]:
    names = [x for x in text.replace(",", " ").split() if x]
    idx = []
    for x in names:
        if x not in L.names:
            raise UsageError(f"unknown element {x!r}; elements are {', '.join(L.names)}")
        idx.append(L.index(x))
    G = generated_filter(L, idx)
    return G, G.mask == (mask_of(idx) | 1 << L.top)


def _table(Q: ResiduatedLattice, key: str, symbol: str) -> list[str]:
    t = getattr(Q, key)
    w = max(len(x) for x in Q.names)
    rows = [f"  {symbol:<{w}} | " + " ".join(f"{x:<{w}}" for x in Q.names)]
    rows.append("  " + "-" * (w + 3 + (w + 1) * Q.n))
    for a in Q.elements:
        rows.append(f"  {Q.label(a):<{w}} | " + " ".join(f"{Q.label(t[a][b]):<{w}}" for b in Q.elements))
    return rows


def cmd_quotient(args) -> int:
    L, _ = _load(args)
    F, exact = _resolve_filter(L, args.filter)
    Qt = quotient(L, F)
    Q = Qt.algebra
    data = {
        "algebra": L.name,
        "filter": F.names,
        "generated": not exact,
        "classes": Qt.congruence.class_names(),
        "quotient": json.loads(corpus.dumps(Q.to_spec())),
    }
    lines = [f"{L.name} / {_set(F.names)}" + ("" if exact else " (generated filter)")]
    lines.append(f"{len(Qt.congruence.classes)} classes:")
    for cls_ in Qt.congruence.class_names():
        lines.append(f"  {_set(cls_)}")
    for key, sym in (("join", "v"), ("meet", "^"), ("prod", "*"), ("imp", "->")):
        lines += ["", *_table(Q, key, sym)]
    _emit(data, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_dot(args) -> int:
    L, _ = _load(args)
    doc = corpus.export_hasse(L, args.output)
    if args.output is None:
        print(doc, end="")
    return EXIT_OK


def cmd_enum(args) -> int:
    if args.hunt:
        ante, cons = parse_hunt(args.hunt)
        result = hunt(ante, cons, args.size, chains_only=args.chains)
        data = {"hunt": args.hunt, "result": result.describe()}
        human = result.describe()
        if isinstance(result, Found):
            spec = result.algebra.to_spec()
            data["algebra"] = json.loads(corpus.dumps(spec))
            data["witness"] = (
                None if result.witness is None else [result.algebra.label(x) for x in result.witness]
            )
            human += "\n" + corpus.dumps(spec)
            if args.output:
                write_algebras([result.algebra], args.output)
        _emit(data, args.format, human)
        return EXIT_CLAIM if isinstance(result, Found) else EXIT_OK
    algebras = list(enumerate_residuated(args.size, args.chains))
    if args.output:
        write_algebras(algebras, args.output)
    noun = "algebra" if len(algebras) == 1 else "algebras"
    data = {"size": args.size, "chains_only": args.chains, "count": len(algebras),
            "names": [L.name for L in algebras]}
    _emit(data, args.format, f"{len(algebras)} {noun}")
    return EXIT_OK


def cmd_corpus_list(args) -> int:
    entries = corpus.corpus()
    data = [
        {"key": e.key, "size": len(e.spec.elements), "provenance": e.provenance}
        for e in entries
    ]
    human = "\n".join(f"{e.key:<13} {len(e.spec.elements):>2}  {e.provenance}" for e in entries)
    _emit(data, args.format, human)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="reslat", description="Finite residuated lattice toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, source=True):
        if source:
            sp.add_argument("source", nargs="?", help="algebra file (JSON)")
            sp.add_argument("--builtin", metavar="KEY", help="built-in corpus algebra")
        sp.add_argument("--format", choices=("human", "structured"), default="human")

    common(sub.add_parser("analyze", help="classify one algebra"))
    common(sub.add_parser("check-claims", help="check every applicable structural result"))
    q = sub.add_parser("quotient", help="quotient by the filter generated by some elements")
    common(q)
    q.add_argument("--filter", required=True, help="element names, comma or space separated")
    d = sub.add_parser("dot", help="Hasse diagram in DOT")
    common(d)
    d.add_argument("-o", "--output", help="write to this path instead of stdout")
    e = sub.add_parser("enum", help="enumerate algebras or hunt for a counterexample")
    common(e, source=False)
    e.add_argument("--size", type=int, required=True, help="size (maximum size when hunting)")
    e.add_argument("--hunt", metavar="SPEC", help="'p1,p2=>q': find A with p1, p2 but not q")
    e.add_argument("--chains", action="store_true", help="chain lattices only")
    e.add_argument("-o", "--output", help="directory for the algebra files")
    common(sub.add_parser("corpus-list", help="list built-in algebras"), source=False)
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "check-claims": cmd_check_claims,
    "quotient": cmd_quotient,
    "dot": cmd_dot,
    "enum": cmd_enum,
    "corpus-list": cmd_corpus_list,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, UnknownKey, CapExceeded, OSError) as exc:
        print(f"reslat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AxiomViolation, MalformedSpec) as exc:
        print(f"reslat: invalid algebra: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ReslatError as exc:
        print(f"reslat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
