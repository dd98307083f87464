"""Command-line front end: ``pcaepg <command> ...``.

Exit codes: 0 success / YES / valid, 1 NO / invalid, 2 input or precondition error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .builder import BuildError, build_b1_epg_detailed
from .classify import CLASSIFIERS, ClassificationError
from .epg import EpgRepresentation, PathError, validate_representation
from .families import Family
from .formats import FormatError, format_graph, load_corpus, parse_graph
from .graph import Graph, GraphError
from .oracle import SearchBudget, cross_validate, search_arc_representation, search_b1_epg
from .arcs import ArcSearchError
from .render import render_svg

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read_text(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    try:
        return Path(src).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {src}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    src = args.input or args.in_ or "-"
    return parse_graph(_read_text(src), args.format)


def _load_rep(path: str) -> EpgRepresentation:
    try:
        return EpgRepresentation.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: not valid JSON ({exc.msg})") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_classify(args) -> int:
    g = _load_graph(args)
    fn = CLASSIFIERS[args.target]
    verdict = fn(g, build=True) if args.build and args.target in ("b1epg", "b1epr") else fn(g)
    _emit(verdict.to_json())
    return EXIT_OK if verdict else EXIT_NO


def cmd_build(args) -> int:
    g = _load_graph(args)
    try:
        result = build_b1_epg_detailed(g)
    except BuildError as exc:
        detail = exc.detail
        out = {"error": str(exc)}
        if hasattr(detail, "to_json"):
            out["certificate"] = detail.to_json()
        _emit(out)
        return EXIT_NO
    text = result.representation.dumps() + "\n"
    _write(args.out, text)
    if args.svg:
        Path(args.svg).write_text(render_svg(result.representation))
    print(f"case: {result.case}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = _load_rep(args.rep)
    g = _load_graph(args)
    report = validate_representation(rep, g, args.max_bends)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_NO


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    if args.arc:
        model = search_arc_representation(g, proper=args.proper, normal=args.normal, helly3=args.helly3)
        if model is None:
            print("none")
            return EXIT_NO
        _emit(model.to_json())
        return EXIT_OK
    budget = SearchBudget.parse_grid(args.grid, args.node_limit)
    result = search_b1_epg(g, budget)
    if not result.found:
        print("none" if result.status == "exhausted" else "inconclusive")
        return EXIT_NO
    _emit(result.representation.to_json())
    return EXIT_OK


def cmd_generate(args) -> int:
    fam = Family(args.family, args.param, args.serpentine)
    sys.stdout.write(format_graph(fam.graph(), args.format))
    return EXIT_OK


def cmd_render(args) -> int:
    Path(args.svg).write_text(render_svg(_load_rep(args.rep)))
    return EXIT_OK


def cmd_crossval(args) -> int:
    budget = SearchBudget.parse_grid(args.grid, args.node_limit)
    corpus = None
    if args.corpus:
        corpus = load_corpus(_read_text(args.corpus).splitlines())
    report = cross_validate(args.max_n, budget, corpus=corpus, jobs=args.jobs)
    _write(args.out, report.text())
    return EXIT_OK if report.ok else EXIT_NO


def _graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file, or - for stdin")
    p.add_argument("--in", dest="in_", metavar="FILE", help="graph file, or - for stdin")
    p.add_argument("--format", choices=["auto", "adj", "graph6"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcaepg", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide class membership with a certificate")
    _graph_input(p)
    p.add_argument("--target", choices=sorted(CLASSIFIERS), default="b1epg")
    p.add_argument("--build", action="store_true", help="attach a representation to YES answers")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="construct a single-bend representation")
    _graph_input(p)
    p.add_argument("--out", default="-")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a representation against a graph")
    _graph_input(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--max-bends", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="bounded brute-force search")
    _graph_input(p)
    p.add_argument("--grid", default="6x6")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--arc", action="store_true", help="search arc models instead of grid paths")
    p.add_argument("--proper", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--helly3", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", help="print a named graph")
    p.add_argument("--family", required=True)
    p.add_argument("--param", type=int)
    p.add_argument("--serpentine", action="store_true")
    p.add_argument("--format", choices=["adj", "graph6"], default="adj")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("render", help="draw a representation as SVG")
    p.add_argument("--rep", required=True)
    p.add_argument("--svg", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("crossval", help="compare classifier and grid search over a corpus")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--grid", default="6x6")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--corpus", help="graph6 file; defaults to the bundled corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_crossval)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ClassificationError as exc:
        out = {"error": str(exc)}
        if exc.verdict is not None:
            out["certificate"] = exc.verdict.to_json()
        print(json.dumps(out), file=sys.stderr)
    except (CliError, FormatError, GraphError, PathError, ArcSearchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
