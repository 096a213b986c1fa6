"""Command-line interface: ``coedge construct|check|spectrum|classify|search|iso``.

Exit codes: 0 success or property holds, 1 property fails or hypotheses not
met, 2 a theorem conclusion was contradicted (a bug), 64 usage error, 65
malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .generate import SearchLimitError, enumerate_regular, search_co_edge_regular
from .graph import FAMILY_NAMES, Graph, GraphError, named_family, s_clique_extension
from .io import (
    ParseError,
    ReportDocument,
    encode_edge_list,
    encode_graph6,
    graph_hash,
    parse_graph,
    parse_graph6_lines,
    rational_str,
)
from .pipeline import (
    ClassificationVerdict,
    ConclusionViolated,
    HypothesesNotMet,
    check_nonexistence_windows,
    classify_theorem_1_2,
    classify_theorem_1_3,
    classify_theorem_1_4,
    verify_theorem_4_1,
)
from .recognize import find_isomorphism
from .regularity import Witness, moment_identities, regularity_report
from .spectra import Cmp, cmp_min_eigenvalue, spectrum

EXIT_OK, EXIT_FAIL, EXIT_VIOLATED, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65

CLASSIFIERS = {
    "1.2": classify_theorem_1_2,
    "1.3": classify_theorem_1_3,
    "1.4": classify_theorem_1_4,
    "4.1": verify_theorem_4_1,
}

# families whose constructor takes (p,), (p, q) or nothing
_ARITY = {"complete_bipartite": 2, "grid": 2, "petersen": 0, "shrikhande": 0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# input ---------------------------------------------------------------------------------


def _read_text(path: str | None) -> tuple[str, str]:
    if path in (None, "-"):
        return sys.stdin.read(), "<stdin>"
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_graph(args) -> tuple[Graph, str]:
    text, source = _read_text(args.input)
    return parse_graph(text, args.format), source


def _document(args, command: str, g: Graph, source: str) -> ReportDocument:
    return ReportDocument(command, source, args.format, graph_hash(g))


def _emit(args, doc: ReportDocument | None, lines: list[str]) -> None:
    if args.json and doc is not None:
        print(doc.to_json())
    else:
        for line in lines:
            print(line)


# sections --------------------------------------------------------------------------------


def _spectrum_section(g: Graph) -> dict:
    spec = spectrum(g)
    roots = []
    for r, m in spec.roots:
        roots.append({
            "interval": [rational_str(r.lo), rational_str(r.hi)],
            "exact": r.exact,
            "multiplicity": m,
            "polynomial": [str(c) for c in r.minimal_polynomial().coeffs],
        })
    return {
        "charpoly": [str(c) for c in spec.charpoly.coeffs],
        "distinct_eigenvalues": spec.distinct_count,
        "roots": roots,
    }


def _verdict_section(v: ClassificationVerdict) -> dict:
    out = v.outcome
    if isinstance(out, HypothesesNotMet):
        detail = list(out.reasons)
    elif isinstance(out, ConclusionViolated):
        detail = list(out.evidence)
    else:
        detail = []
    return {
        "theorem": v.theorem,
        "outcome": type(out).__name__,
        "value": str(out),
        "detail": detail,
        "trail": [{"check": s.check, "result": s.result, "witness": s.witness} for s in v.trail],
    }


def _verdict_exit(v: ClassificationVerdict) -> int:
    if isinstance(v.outcome, ConclusionViolated):
        return EXIT_VIOLATED
    if isinstance(v.outcome, HypothesesNotMet):
        return EXIT_FAIL
    return EXIT_OK


def _verdict_lines(v: ClassificationVerdict) -> list[str]:
    lines = [f"{v.theorem}: {v.outcome}"]
    for s in v.trail:
        lines.append(f"  {s.check}: {s.result}" + (f" [{s.witness}]" if s.witness else ""))
    return lines


# commands ----------------------------------------------------------------------------------


def cmd_construct(args) -> int:
    arity = _ARITY.get(args.family, 1)
    params = [args.p, args.q][:arity]
    if any(x is None for x in params):
        raise UsageError(f"family {args.family!r} needs " + " and ".join(["--p", "--q"][:arity]))
    g = named_family(args.family, *params)
    if args.s is not None:
        if args.s < 1:
            raise UsageError("--s must be at least 1")
        g = s_clique_extension(g, args.s)
    if args.format == "edgelist":
        sys.stdout.write(encode_edge_list(g))
    else:
        print(encode_graph6(g))
    return EXIT_OK


def cmd_check(args) -> int:
    g, source = _read_graph(args)
    rep = regularity_report(g)
    moments = moment_identities(g)
    holds = rep.flags.get("co_edge_regular", False) and not isinstance(moments, Witness) and moments.holds
    section = {
        "n": rep.n, "k": rep.k, "c": rep.c, "ell": rep.ell, "a": rep.a,
        "terwilliger_c": rep.terwilliger_c,
        "flags": dict(sorted(rep.flags.items())),
    }
    if isinstance(moments, Witness):
        mom = {"holds": False, "reason": str(moments)}
    else:
        mom = {"holds": moments.holds, "walk_regular": moments.walk_regular,
               "vertex_independent": moments.vertex_independent,
               "sum_a": list(moments.sum_a), "sum_a_sq": list(moments.sum_a_sq),
               "failures": [str(w) for w in moments.failures]}
    doc = _document(args, "check", g, source)
    doc.sections = {"regularity": section, "moments": mom,
                    "witnesses": [str(w) for w in rep.witnesses]}
    lines = [f"n={rep.n} k={rep.k} c={rep.c} ell={rep.ell}"]
    lines += [f"{name}: {'yes' if val else 'no'}" for name, val in sorted(rep.flags.items())]
    lines.append(f"moment identities: {'hold' if mom['holds'] else 'fail'}")
    lines += [f"witness: {w}" for w in rep.witnesses]
    _emit(args, doc, lines)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_spectrum(args) -> int:
    g, source = _read_graph(args)
    if g.n == 0:
        raise UsageError("spectrum needs at least one vertex")
    section = _spectrum_section(g)
    spec = spectrum(g)
    lines = [f"charpoly: {spec.charpoly}", f"distinct eigenvalues: {spec.distinct_count}"]
    lines += [f"  {r}  (multiplicity {m})" for r, m in spec.roots]
    code = EXIT_OK
    if args.threshold is not None:
        try:
            thr = Fraction(args.threshold)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--threshold must be a rational number, got {args.threshold!r}") from None
        cmp = cmp_min_eigenvalue(g, thr)
        section["threshold"] = {"value": rational_str(thr), "theta_min_cmp": cmp.name.lower()}
        lines.append(f"theta_min {cmp.symbol} {rational_str(thr)}")
        code = EXIT_FAIL if cmp == Cmp.LESS else EXIT_OK
    doc = _document(args, "spectrum", g, source)
    doc.sections = {"spectrum": section}
    _emit(args, doc, lines)
    return code


def cmd_classify(args) -> int:
    g, source = _read_graph(args)
    if args.theorem == "windows":
        w = check_nonexistence_windows(g)
        verdicts = list(w.verdicts)
        code = EXIT_VIOLATED if w.violated else EXIT_OK
    else:
        v = CLASSIFIERS[args.theorem](g)
        verdicts = [v]
        code = _verdict_exit(v)
    doc = _document(args, "classify", g, source)
    doc.sections = {"verdicts": [_verdict_section(v) for v in verdicts]}
    lines = []
    for v in verdicts:
        lines += _verdict_lines(v)
    _emit(args, doc, lines)
    return code


def cmd_search(args) -> int:
    if args.c is None:
        graphs = list(enumerate_regular(args.n, args.k))
        graphs.sort(key=encode_graph6)
    else:
        graphs = search_co_edge_regular(args.n, args.k, args.c)
    codes = [encode_graph6(g) for g in graphs]
    if args.json:
        doc = ReportDocument("search", f"n={args.n} k={args.k} c={args.c}", "graph6", None)
        doc.sections = {"search": {"n": args.n, "k": args.k, "c": args.c,
                                   "count": len(codes), "graphs": codes}}
        print(doc.to_json())
    else:
        for code in codes:
            print(code)
        print(f"# {len(codes)} graph(s)", file=sys.stderr)
    return EXIT_OK


def cmd_iso(args) -> int:
    if args.input and len(args.input) == 2:
        g = parse_graph(_read_text(args.input[0])[0], args.format)
        h = parse_graph(_read_text(args.input[1])[0], args.format)
        source = " ".join(args.input)
    else:
        text, source = _read_text(args.input[0] if args.input else None)
        if args.format != "graph6":
            raise UsageError("reading both graphs from one stream needs graph6 input")
        graphs = parse_graph6_lines(text)
        if len(graphs) != 2:
            raise ParseError(f"expected two graph6 lines, found {len(graphs)}")
        g, h = graphs
    phi = find_isomorphism(g, h)
    doc = ReportDocument("iso", source, args.format, graph_hash(g))
    doc.sections = {"iso": {"isomorphic": phi is not None,
                            "mapping": list(phi) if phi is not None else None,
                            "other_hash": graph_hash(h)}}
    lines = ["isomorphic" if phi is not None else "not isomorphic"]
    if phi is not None:
        lines.append("mapping: " + " ".join(map(str, phi)))
    _emit(args, doc, lines)
    return EXIT_OK if phi is not None else EXIT_FAIL


# parser --------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coedge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def inputs(p, nargs=None):
        p.add_argument("--in", dest="input", metavar="FILE", nargs=nargs,
                       help="input file (default: standard input)")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("construct", help="print a named graph")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--s", type=int, help="replace each vertex by an s-clique")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="regularity flags and moment identities")
    inputs(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="exact characteristic polynomial and eigenvalues")
    inputs(p)
    p.add_argument("--threshold", help="compare the smallest eigenvalue with this rational (write --threshold=-5/2 for negative fractions)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="run a grid characterization on a graph")
    inputs(p)
    p.add_argument("--theorem", required=True, choices=tuple(CLASSIFIERS) + ("windows",))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="enumerate regular or co-edge-regular graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    inputs(p, nargs="+")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "iso" and args.input and len(args.input) > 2:
        parser.error("iso takes at most two --in files")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"coedge: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GraphError, SearchLimitError) as exc:
        print(f"coedge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if args.command == "search":
            print(f"coedge: {exc}", file=sys.stderr)
            return EXIT_USAGE
        raise


if __name__ == "__main__":
    sys.exit(main())
