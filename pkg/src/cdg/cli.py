"""Command-line interface: ``cdg <subcommand> ...``.

Exit status is 0 whatever the verdict, 2 for bad input or flags, 3 for a broken
knowledge base.  ``$CDG_KB`` names a KB file to use instead of the built-in seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .admissibility import (
    check_hypothesis_28,
    vertex_admissible,
    vertex_strongly_admissible,
)
from .canonical import canonical_form
from .classifier import classify, classify_all, graph_entry, render
from .constructions import (
    degree_set_to_graph,
    factorization_lines,
    field_construction_degrees,
    join_graphs,
    search_field_certificate,
)
from .enumerate import enumerate_graphs, filter_universe, predicate_names
from .errors import CDGError, GraphInputError, PreconditionError
from .fixtures import fixture, fixture_names
from .graph import Graph, format_cdg1, parse_cdg1, to_dot
from .kb import KBError, default_kb, kb_dumps, kb_load, verify_kb
from .records import FieldCertificate
from .rules import satisfies_palfy_inequality

EXIT_INPUT = 2
EXIT_KB = 3

MILESTONES = ("connected", "palfy", "post_diameter", "joins", "eliminated", "unknown")


class InputError(CDGError):
    pass


def _add_graph_source(p: argparse.ArgumentParser, multiple: bool = False) -> None:
    nargs = "*" if multiple else "?"
    p.add_argument("graph", nargs=nargs, help="graph file in cdg1 format ('-' for stdin)")
    action = "append" if multiple else "store"
    p.add_argument("--inline", action=action, metavar="TEXT", help='graph text, e.g. "n=3;edges=1-2,2-3"')
    p.add_argument("--fixture", action=action, metavar="NAME", help="built-in figure graph, e.g. FIG5_III")


def _read_graph_file(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_cdg1(text)


def _fixture(name: str) -> Graph:
    try:
        return fixture(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _one_graph(args) -> Graph:
    sources = [s for s in (args.graph, args.inline, args.fixture) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one graph: a file, --inline TEXT or --fixture NAME")
    if args.inline is not None:
        return parse_cdg1(args.inline)
    if args.fixture is not None:
        return _fixture(args.fixture)
    return _read_graph_file(args.graph)


def _many_graphs(args) -> list[Graph]:
    out = [_read_graph_file(p) for p in args.graph or []]
    out += [parse_cdg1(t) for t in args.inline or []]
    out += [_fixture(n) for n in args.fixture or []]
    return out


def _vertex(text: str) -> int:
    t = text.strip().lower()
    if t.startswith("p"):
        t = t[1:]
    if not t.isdigit():
        raise argparse.ArgumentTypeError(f"bad vertex {text!r}; use p4 or 4")
    return int(t)


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from None
    return a, b


def _add_output(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="machine-readable output")
    g.add_argument("--dot-dir", metavar="DIR", help="write one DOT file per graph, named by canonical key")


def _write_dots(graphs: Sequence[Graph], directory: str, out: TextIO) -> None:
    d = Path(directory)
    try:
        d.mkdir(parents=True, exist_ok=True)
        for g in graphs:
            key = canonical_form(g).hex()
            (d / f"{key}.dot").write_text(to_dot(g, f"G{key}"), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write to {directory}: {exc}") from None
    out.write(f"wrote {len(graphs)} DOT file(s) to {d}\n")


# --- subcommands -------------------------------------------------------------------


def cmd_enumerate(args, out: TextIO) -> None:
    u = enumerate_graphs(args.n, connected_only=args.connected)
    if args.predicate:
        u = filter_universe(u, args.predicate)
    if args.dot_dir:
        _write_dots(list(u), args.dot_dir, out)
        return
    if args.json:
        rows = [{"key": k.hex(), "cdg1": format_cdg1(g, single_line=True)} for k, g in zip(u.keys(), u)]
        json.dump({"n": u.n, "count": len(u), "graphs": rows}, out, indent=2)
        out.write("\n")
        return
    for k, g in zip(u.keys(), u):
        out.write(f"{k.hex()} {format_cdg1(g, single_line=True)}\n")
    out.write(f"count: {len(u)}\n")


def cmd_classify(args, out: TextIO) -> None:
    g = _one_graph(args)
    rec = classify(g, default_kb())
    if args.json:
        json.dump(graph_entry(g, canonical_form(g), rec), out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(render(g, rec))


def cmd_explain(args, out: TextIO) -> None:
    g = _one_graph(args)
    out.write(render(g, classify(g, default_kb())))


def cmd_report(args, out: TextIO) -> None:
    report = classify_all(args.n, default_kb())
    if args.json:
        out.write(report.to_json())
        return
    if args.dot_dir:
        _write_dots([k.graph() for k, _ in report.per_graph], args.dot_dir, out)
    for k, rec in report.per_graph:
        last = rec.justification[-1].rule if rec.justification else "-"
        out.write(f"{k.hex():<14} {rec.verdict.value:<15} {last:<18} {format_cdg1(k.graph(), single_line=True)}\n")
    out.write(f"\ngraphs on {report.n} vertices: {len(report.per_graph)}\n")
    for name, count in report.totals.items():
        out.write(f"  {name:<30}{count:>6}\n")
    out.write("pipeline:\n")
    for name, count in report.pipeline_counts.items():
        out.write(f"  {name:<30}{count:>6}\n")
    out.write("milestones: " + "/".join(str(report.pipeline_counts[m]) for m in MILESTONES)
              + " (" + "/".join(MILESTONES) + ")\n")


def _field_lines(cert: FieldCertificate) -> list[str]:
    g, label = degree_set_to_graph(cert.degrees)
    lines = [
        f"field q={cert.q} n={cert.n} ({cert.provenance})",
        "degrees: " + ", ".join(map(str, cert.degrees)),
        "graph: " + format_cdg1(g, single_line=True),
        "primes: " + ", ".join(f"p{v}={p}" for p, v in sorted(label.items(), key=lambda t: t[1])),
    ]
    return lines + factorization_lines(cert)


def cmd_construct(args, out: TextIO) -> None:
    if args.components:
        a, b = sorted(args.components)
        if a < 1 or b > 7:
            raise InputError("component sizes must lie in 1..7")
        if not satisfies_palfy_inequality(a, b):
            out.write(f"none: components {a} and {b} violate b >= 2^a - 1 ({b} >= {2**a - 1} fails)\n")
            return
        cert = search_field_certificate(a, b)
        if cert is None:
            out.write(f"none: no field construction found for K{a} + K{b}\n")
            return
        out.write("\n".join(_field_lines(cert)) + "\n")
        return
    q, n = args.field
    try:
        degrees = field_construction_degrees(q, n)
    except (ValueError, OverflowError) as exc:
        raise InputError(str(exc)) from None
    out.write("\n".join(_field_lines(FieldCertificate(q, n, degrees.degrees))) + "\n")


def cmd_join(args, out: TextIO) -> None:
    factors = _many_graphs(args)
    g = join_graphs(factors)
    out.write(format_cdg1(g) + "\n")
    if args.classify:
        out.write(render(g, classify(g, default_kb())))


def cmd_admissible(args, out: TextIO) -> None:
    g = _one_graph(args)
    kb = default_kb()
    check = vertex_strongly_admissible if args.strong else vertex_admissible
    t = check(g, args.vertex, kb)
    kind = "strongly admissible" if args.strong else "admissible"
    out.write(f"p{args.vertex} {kind}: {t.value.value}\n")
    for e in t.evidence:
        out.write(f"  {e.line()}\n")


def cmd_hypothesis28(args, out: TextIO) -> None:
    g = _one_graph(args)
    r = check_hypothesis_28(g, args.vertex, default_kb())
    out.write("\n".join(r.lines()) + "\n")


def cmd_fixtures(args, out: TextIO) -> None:
    for name in fixture_names():
        out.write(f"{name} {format_cdg1(fixture(name), single_line=True)}\n")


def cmd_kb(args, out: TextIO) -> int:
    kb = kb_load(args.file) if getattr(args, "file", None) else default_kb()
    if args.kb_command == "dump":
        out.write(kb_dumps(kb))
        return 0
    problems = verify_kb(kb)
    for key, reason in problems:
        sys.stderr.write(f"{key}: {reason}\n")
    out.write(f"{len(kb)} record(s), {len(problems)} problem(s)\n")
    return EXIT_KB if problems else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdg", description="Classify small graphs as prime character "
                                     "degree graphs of solvable groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list non-isomorphic graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--predicate", choices=predicate_names())
    _add_output(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="verdict and trace for one graph")
    _add_graph_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("explain", help="human-readable justification")
    _add_graph_source(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("report", help="classify every graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    _add_output(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("construct", help="field-group constructions")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--components", type=_pair, metavar="A,B", help="search a field group for K_A + K_B")
    g.add_argument("--field", type=_pair, metavar="Q,N", help="degree set of the field group of order Q^N")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("join", help="join two or more graphs")
    _add_graph_source(p, multiple=True)
    p.add_argument("--classify", action="store_true", help="also classify the join")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("admissible", help="admissibility of a vertex")
    _add_graph_source(p)
    p.add_argument("--vertex", type=_vertex, required=True, metavar="pK")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("hypothesis28", help="check the five-condition hypothesis at a vertex")
    _add_graph_source(p)
    p.add_argument("--vertex", type=_vertex, required=True, metavar="pK")
    p.set_defaults(func=cmd_hypothesis28)

    p = sub.add_parser("kb", help="knowledge-base maintenance")
    kb_sub = p.add_subparsers(dest="kb_command", required=True)
    d = kb_sub.add_parser("dump", help="print the KB in file format")
    d.add_argument("file", nargs="?", help="KB file (default: $CDG_KB or the built-in seed)")
    v = kb_sub.add_parser("verify", help="re-check every record")
    v.add_argument("file", nargs="?", help="KB file (default: $CDG_KB or the built-in seed)")
    p.set_defaults(func=cmd_kb)

    p = sub.add_parser("fixtures", help="list built-in figure graphs")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.func(args, out)
    except KBError as exc:
        sys.stderr.write(f"cdg: knowledge base error: {exc}\n")
        return EXIT_KB
    except (InputError, GraphInputError, PreconditionError) as exc:
        sys.stderr.write(f"cdg: {exc}\n")
        return EXIT_INPUT
    return rc if isinstance(rc, int) else 0


if __name__ == "__main__":
    sys.exit(main())
