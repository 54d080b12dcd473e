"""Command-line interface.

Exit status: 0 success / yes, 1 a definite no, 2 error or inconclusive,
64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from cott import kernels
from cott.families import FamilySpec, generate, generate_set_system, resolve_family, split_completion
from cott.ferrers import fdim_le_2
from cott.formats import FORMATS, ParseError, guess_format, parse_adjacency_matrix, parse_graph, serialize_graph
from cott.graphcore import Bigraph, BinaryMatrix, Graph, SizeLimitError, bigraph_from_set_system, bits, complement
from cott.oracle import crosscheck
from cott.recognize import (
    MATRIX_CAP,
    OBSTRUCTION_CAP,
    Verdict,
    outcome_to_dict,
    recognize_cott,
    recognize_cott_matrix,
    recognize_cott_obstruction,
    witness_to_dict,
)
from cott.sirep import (
    CertificateError,
    certificate_to_dict,
    certificate_to_json,
    representation_from_dict,
    tt_certificate_from_dict,
    verify_representation,
    verify_tt,
)
from cott.structure import (
    find_asteroidal_triple,
    find_edge_asteroid,
    has_long_induced_cycle,
    is_chordal,
    is_interval,
    is_split,
    is_strongly_chordal,
)

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_USAGE, EXIT_DATAERR = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read(path)
    return parse_graph(text, guess_format(text) if fmt == "auto" else fmt)


def _emit(args: argparse.Namespace, doc: dict[str, Any], human: list[str], started: float) -> None:
    if getattr(args, "timing", False):
        doc["wall_seconds"] = round(time.perf_counter() - started, 6)
        human.append(f"time: {doc['wall_seconds']:.3f}s")
    if args.output == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write("\n".join(human) + "\n")


def _names(g: Graph, vs: Sequence[int] | None) -> list[str]:
    return [g.label(v) for v in vs or ()]


# verbs ------------------------------------------------------------------------------------

def cmd_recognize(args: argparse.Namespace, started: float) -> int:
    g = _load_graph(args.input, args.format)
    if g.n > args.max_n:
        raise SizeLimitError(f"graph has {g.n} vertices, above --max-n {args.max_n}")
    if args.route == "matrix":
        out = recognize_cott_matrix(g, cap=args.max_n)
    elif args.route == "obstruction":
        out = recognize_cott_obstruction(g, cap=max(args.max_n, OBSTRUCTION_CAP))
    else:
        out = recognize_cott(g, cap=args.max_n)
    doc = outcome_to_dict(g, out)
    doc["backend"] = kernels.BACKEND
    human = [f"verdict: {out.verdict.value} (route: {out.route})"]
    if out.agreement is not None:
        human.append(f"routes agree: {'yes' if out.agreement else 'NO'}")
        if out.other is not None and out.other.witness is not None:
            human.append(f"obstruction: {json.dumps(witness_to_dict(g, out.other.witness))}")
    if out.representation is not None:
        human.append("representation:")
        for v, iv in enumerate(out.representation):
            human.append(f"  {g.label(v)}: {iv}")
        human.append("ordering: " + " ".join(_names(g, out.ordering)))
    if out.witness is not None:
        human.append(f"witness: {json.dumps(witness_to_dict(g, out.witness))}")
    if args.certificate and out.certificate is not None:
        cert = certificate_to_dict(g, out.certificate, out.ordering)
        Path(args.certificate).write_text(certificate_to_json(cert))
        human.append(f"certificate written to {args.certificate}")
        doc["certificate_path"] = args.certificate
    _emit(args, doc, human, started)
    if out.agreement is False:
        print("warning: matrix and obstruction routes disagree on this graph", file=sys.stderr)
    return EXIT_OK if out.verdict is Verdict.COTT else EXIT_NO


def _load_cert(path: str) -> dict[str, Any]:
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CertificateError("certificate must be a JSON object")
    return doc


def cmd_verify_rep(args: argparse.Namespace, started: float) -> int:
    g = _load_graph(args.graph, args.format)
    rep = representation_from_dict(g, _load_cert(args.certificate))
    check = verify_representation(g, rep)
    pairs = [[g.label(u), g.label(v)] for u, v in check.mismatches]
    doc = {"valid": check.ok, "mismatches": pairs}
    human = ["representation verifies" if check else f"representation FAILS on {len(pairs)} pairs"]
    human += [f"  {u} {v}" for u, v in pairs]
    _emit(args, doc, human, started)
    return EXIT_OK if check else EXIT_NO


def cmd_verify_tt(args: argparse.Namespace, started: float) -> int:
    g = _load_graph(args.graph, args.format)
    target = complement(g) if args.complement else g
    check = verify_tt(target, tt_certificate_from_dict(g, _load_cert(args.certificate)))
    pairs = [[g.label(u), g.label(v)] for u, v in check.mismatches]
    doc = {"valid": check.ok, "mismatches": pairs}
    human = ["TT certificate verifies" if check else f"TT certificate FAILS on {len(pairs)} pairs"]
    human += [f"  {u} {v}" for u, v in pairs]
    _emit(args, doc, human, started)
    return EXIT_OK if check else EXIT_NO


def _bigraph_of_graph(g: Graph) -> Bigraph:
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    raise ValueError("graph is not bipartite; fdim2 needs a bigraph")
    xs = [v for v in range(g.n) if side[v] == 0]
    ys = [v for v in range(g.n) if side[v] == 1]
    m = BinaryMatrix.from_lists([[int(g.has_edge(x, y)) for y in ys] for x in xs])
    if not xs:
        m = BinaryMatrix(0, len(ys), ())
    return Bigraph(len(xs), len(ys), m, tuple(_names(g, xs)), tuple(_names(g, ys)))


def cmd_fdim2(args: argparse.Namespace, started: float) -> int:
    text = _read(args.input)
    if args.bigraph:
        rows = [line.split("#", 1)[0].replace(" ", "") for line in text.splitlines()]
        rows = [r for r in rows if r]
        for k, r in enumerate(rows, start=1):
            if set(r) - {"0", "1"}:
                raise ParseError(f"bad matrix entry in {r!r}", k)
        if len({len(r) for r in rows}) > 1:
            raise ParseError("matrix rows differ in length")
        m = BinaryMatrix.from_lists([[int(c) for c in r] for r in rows])
        b = Bigraph.from_matrix(m)
        xl = [f"x{i + 1}" for i in range(b.x_size)]
        yl = [f"y{j + 1}" for j in range(b.y_size)]
    else:
        g = parse_graph(text, guess_format(text) if args.format == "auto" else args.format)
        b = _bigraph_of_graph(g)
        xl, yl = list(b.x_labels or ()), list(b.y_labels or ())
    result = fdim_le_2(b)
    doc: dict[str, Any] = {"fdim_le_2": result.ok, "x": xl, "y": yl}
    if result.orders is not None:
        doc["row_order"] = [xl[i] for i in result.orders.row_order]
        doc["col_order"] = [yl[j] for j in result.orders.col_order]
    if result.odd_cycle is not None:
        doc["odd_cycle"] = [[xl[z.row], yl[z.col]] for z in result.odd_cycle]
    human = [f"Ferrers dimension <= 2: {'yes' if result.ok else 'no'}"]
    if result.orders is not None:
        human.append("rows: " + " ".join(doc["row_order"]))
        human.append("cols: " + " ".join(doc["col_order"]))
    if result.odd_cycle is not None:
        human.append("odd cycle of zeros: " + " ".join(f"({a},{b})" for a, b in doc["odd_cycle"]))
    _emit(args, doc, human, started)
    return EXIT_OK if result.ok else EXIT_NO


def cmd_generate(args: argparse.Namespace, started: float) -> int:
    spec = FamilySpec(resolve_family(args.family), args.param)
    if args.completion != "none":
        if not spec.name.startswith("TM_"):
            raise UsageError("--completion applies only to TM_* set-system families")
        g = split_completion(bigraph_from_set_system(generate_set_system(spec)), args.completion)
    else:
        g = generate(spec)
    if args.format == "edge-list" or args.format == "auto":
        sys.stdout.write(serialize_graph(g, "edge-list"))
    else:
        sys.stdout.write(serialize_graph(g, args.format))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, started: float) -> int:
    g = _load_graph(args.input, args.format)
    chordal = is_chordal(g)
    strong = is_strongly_chordal(g)
    interval = is_interval(g)
    at = find_asteroidal_triple(g)
    ea = find_edge_asteroid(g, args.max_edges)
    cycle = has_long_induced_cycle(g, 6)
    doc: dict[str, Any] = {
        "n": g.n,
        "edges": g.num_edges,
        "chordal": chordal.ok,
        "chordless_cycle": _names(g, chordal.cycle) if chordal.cycle else None,
        "strongly_chordal": strong.ok,
        "stuck_subgraph": _names(g, strong.stuck) if strong.stuck else None,
        "split": is_split(g),
        "interval": interval.ok,
        "asteroidal_triple": _names(g, at.triple) if at else None,
        "edge_asteroid": {
            "status": ea.status,
            "max_edges": ea.max_edges,
            "edges": [_names(g, e) for e in ea.asteroid.edges] if ea.asteroid else None,
            "interpretation": ea.interpretation,
        },
        "induced_cycle_6_plus": _names(g, cycle) if cycle else None,
    }
    human = [
        f"vertices: {g.n}, edges: {g.num_edges}",
        f"chordal: {chordal.ok}" + (f" (cycle {' '.join(doc['chordless_cycle'])})" if chordal.cycle else ""),
        f"strongly chordal: {strong.ok}",
        f"split: {doc['split']}",
        f"interval: {interval.ok}",
        f"asteroidal triple: {' '.join(doc['asteroidal_triple']) if at else 'none'}",
        f"edge-asteroid (<= {ea.max_edges} edges): {ea.status}"
        + (" " + " ".join("-".join(e) for e in doc["edge_asteroid"]["edges"]) if ea.asteroid else ""),
        f"induced cycle >= 6: {' '.join(doc['induced_cycle_6_plus']) if cycle else 'none'}",
    ]
    _emit(args, doc, human, started)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, started: float) -> int:
    report = crosscheck(
        args.max_n, n_min=args.min_n, workers=args.workers, checkpoint=args.resume, progress=args.progress
    )
    doc = report.to_dict(timing=args.timing)
    doc["backend"] = kernels.BACKEND
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=2) + "\n")
    if args.disagreements:
        Path(args.disagreements).write_text("".join(d["graph6"] + "\n" for d in report.disagreements))
    human = [f"graphs checked: {report.graphs} (n = {args.min_n}..{args.max_n})"]
    for n, c in report.counts.items():
        human.append(f"  n={n}: {c['graphs']} graphs, {c['CoTT']} co-TT, {c['NotCoTT']} not")
    human.append(f"route disagreements: {len(report.disagreements)}")
    for d in report.disagreements:
        human.append(f"  {d['graph6']}: matrix={d['matrix']} obstruction={d['obstruction']}")
    human.append(f"invariant violations: {len(report.violations)}")
    for v in report.violations:
        human.append(f"  {v['graph6']}: {'; '.join(v['violations'])}")
    if args.timing:
        human.append(f"elapsed: {report.elapsed_seconds:.1f}s")
    args.timing = False
    _emit(args, doc, human, started)
    return EXIT_OK if report.agreement and not report.violations else EXIT_NO


# parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cott", description="Recognise and certify co-TT graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    fmt_choices = [*FORMATS, "auto"]

    def common(p: argparse.ArgumentParser, fmt_default: str = "edge-list") -> None:
        p.add_argument("--format", choices=fmt_choices, default=fmt_default, help="graph input format")
        p.add_argument("--output", choices=("human", "json"), default="human")
        p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    p = sub.add_parser("recognize", help="decide co-TT membership with certificates")
    p.add_argument("input", nargs="?", default="-", help="graph file or '-' for stdin")
    p.add_argument("--route", choices=("matrix", "obstruction", "both"), default="both")
    p.add_argument("--max-n", type=_positive, default=MATRIX_CAP)
    p.add_argument("--certificate", metavar="PATH", help="write the co-TT certificate here")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify-rep", help="check a signed-interval certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(func=cmd_verify_rep)

    p = sub.add_parser("verify-tt", help="check a threshold-tolerance certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--complement", action="store_true", help="check against the complement of GRAPH")
    common(p)
    p.set_defaults(func=cmd_verify_tt)

    p = sub.add_parser("fdim2", help="decide Ferrers dimension <= 2")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--bigraph", action="store_true", help="input is a 0/1 biadjacency matrix")
    common(p)
    p.set_defaults(func=cmd_fdim2)

    p = sub.add_parser("generate", help="emit a named family member")
    p.add_argument("family")
    p.add_argument("param", nargs="?", type=int)
    p.add_argument("--completion", choices=("none", "X", "Y"), default="none")
    p.add_argument("--format", choices=fmt_choices, default="edge-list")
    p.set_defaults(func=cmd_generate, output="human")

    p = sub.add_parser("analyze", help="structural panel")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--max-edges", type=_positive, default=7, help="edge-asteroid size bound")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="cross-check both routes on all small graphs")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--report", metavar="PATH", help="write the JSON report here")
    p.add_argument("--resume", metavar="PATH", help="checkpoint file (created or resumed)")
    p.add_argument("--disagreements", metavar="PATH", help="write disagreeing graphs as graph6")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--output", choices=("human", "json"), default="human")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except UsageError as exc:
        print(f"cott: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, CertificateError) as exc:
        print(f"cott: malformed input: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except (SizeLimitError, ValueError) as exc:
        print(f"cott: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
