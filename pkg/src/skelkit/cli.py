"""Command-line front end: ``skelkit <command> [graph-file] [options]``.

Graphs are read from a file or stdin as an edge list (default) or graph6.
Exit status is 2 for bad input or arguments and 3 for capacity errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from .equivalence import equivalence_classes
from .errors import CapacityError, GraphParseError
from .graph import Graph, parse_edge_list, parse_graph6, to_dot, to_edge_list
from .prime_graph import prime_graph_of_graph, sep_series
from .sep_group import (
    Permutation,
    contains,
    hereditary_witnesses,
    parse_cycles,
    sep_order,
    sep_signature,
)
from .skeleton import complete_skeleton
from .enumeration import (
    catalog_to_csv,
    enumerate_graphs,
    enumerate_skeleton_structures,
    rank_catalog,
)
from .spectral import spectral_report

GRAPH_COMMANDS = {
    "classes": "structural equivalence classes",
    "sep-order": "order of the group generated by twin swaps",
    "sep-member": "test a permutation for membership, with sub-cycle witnesses",
    "skeleton": "complete skeleton (clique super-nodes)",
    "structure": "skeleton read as a plain graph",
    "primegraph": "prime graph of the SEP group",
    "series": "iterated prime graphs down to the empty graph",
    "rank": "exact rank of I + A",
    "multiplicity": "multiplicity of the eigenvalue -1",
    "lambda": "rank deficit of the skeleton structure",
}


class UsageError(Exception):
    pass


def _read_graph(args: argparse.Namespace, stdin: TextIO) -> Graph:
    if args.input in (None, "-"):
        text = stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
    if args.format == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _mode(args: argparse.Namespace) -> str:
    return "json" if args.json else "dot" if args.dot else "csv" if args.csv else "human"


def _need(mode: str, allowed: Sequence[str], command: str) -> None:
    if mode not in allowed:
        raise UsageError(f"--{mode} output is not available for '{command}'")


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True) + "\n"


def _classes(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json", "dot"), "classes")
    p = equivalence_classes(g)
    if mode == "json":
        return _dump(p.to_dict())
    if mode == "dot":
        palette = ("lightblue", "salmon", "palegreen", "khaki", "plum", "lightgray")
        index = p.class_index()
        return to_dot(g, colors={v: palette[index[v] % len(palette)] for v in range(g.n)})
    lines = [f"s = {p.s}"]
    for i, (members, kind) in enumerate(zip(p.classes, p.kinds)):
        lines.append(f"class {i} ({kind.value}): " + " ".join(str(g.label(v)) for v in members))
    return "\n".join(lines) + "\n"


def _sep_order(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json"), "sep-order")
    sig = sep_signature(equivalence_classes(g))
    order = sep_order(sig)
    if mode == "json":
        return _dump({"sizes": list(sig.sizes), "s": sig.s, "alpha": sig.alpha,
                      "beta": sig.beta, "order": order})
    return f"|SEP| = {order}\n"


def _sep_member(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json"), "sep-member")
    if args.perm is None:
        raise UsageError("sep-member needs --perm, e.g. --perm '(2 3)'")
    try:
        sigma = Permutation.from_cycles(parse_cycles(args.perm), g.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p = equivalence_classes(g)
    member = contains(p, sigma)
    witnesses = hereditary_witnesses(p, sigma) if member else []
    if mode == "json":
        return _dump({
            "perm": str(sigma),
            "member": member,
            "witnesses": [{"perm": str(w.perm), "member": w.member} for w in witnesses],
        })
    verdict = "is in SEP" if member else "is not in SEP"
    lines = [f"{sigma} {verdict}"]
    lines += [f"  {w.perm}: {'member' if w.member else 'NOT a member'}" for w in witnesses]
    return "\n".join(lines) + "\n"


def _skeleton(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json", "dot"), "skeleton")
    skel = complete_skeleton(g)
    if mode == "json":
        return _dump(skel.to_dict())
    if mode == "dot":
        return skel.to_dot()
    lines = [f"node {i}: K_{nd.size} {{{' '.join(map(str, nd.members))}}}"
             for i, nd in enumerate(skel.nodes)]
    lines += [f"edge {a} {b}" for a, b in sorted(skel.edges)]
    return "\n".join(lines) + "\n"


def _structure(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json", "dot"), "structure")
    s = complete_skeleton(g).structure()
    if mode == "json":
        return _dump({"n": s.n, "edges": [list(e) for e in s.edges()]})
    if mode == "dot":
        return to_dot(s, name="Structure")
    return to_edge_list(s)


def _primegraph(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json", "dot"), "primegraph")
    pg = prime_graph_of_graph(g)
    if mode == "json":
        return _dump(pg.to_dict())
    if mode == "dot":
        return pg.to_dot()
    return (
        "vertices: " + " ".join(map(str, pg.vertices)) + "\n"
        + "edges: " + " ".join(f"{p}-{q}" for p, q in pg.sorted_edges()) + "\n"
    )


def _series(g: Graph, args, mode: str) -> str:
    _need(mode, ("human", "json"), "series")
    series = sep_series(g)
    if mode == "json":
        return _dump(series.to_dict())
    lines = [f"length = {series.length}"]
    for i, step in enumerate(series.steps, start=1):
        edges = " ".join(f"{p}-{q}" for p, q in step.sorted_edges()) or "-"
        lines.append(f"step {i}: vertices {' '.join(map(str, step.vertices))}; edges {edges}")
    return "\n".join(lines) + "\n"


def _spectral(field: str) -> Callable:
    def run(g: Graph, args, mode: str) -> str:
        _need(mode, ("human", "json"), field)
        report = spectral_report(g)
        if mode == "json":
            return _dump(report.to_dict())
        if field == "rank":
            return f"rank(I+A) = {report.rank_I_plus_A}\n"
        if field == "lambda":
            return f"lambda = {report.lambda_}\n"
        return f"multiplicity(-1) = {report.minus_one_multiplicity}\n{report.summary()}\n"

    return run


def _enumerate(args, mode: str) -> str:
    _need(mode, ("human", "json", "csv"), "enumerate")
    if args.skeletons:
        entries = enumerate_skeleton_structures(args.n)
        if mode == "csv":
            return catalog_to_csv(entries)
        if mode == "json":
            return _dump([e.to_dict() for e in entries])
        return "".join(f"{e.graph6}\t{e.name}\trank={e.rank}\tlambda={e.lambda_}\n" for e in entries)
    forms = enumerate_graphs(args.n)
    if mode == "json":
        return _dump([f.graph6 for f in forms])
    header = "graph6\n" if mode == "csv" else ""
    return header + "".join(f.graph6 + "\n" for f in forms)


def _catalog(args, mode: str) -> str:
    _need(mode, ("human", "json", "csv"), "catalog")
    catalog = rank_catalog(args.n)
    if mode == "json":
        return _dump({str(r): [e.to_dict() for e in es] for r, es in catalog.items()})
    if mode == "csv":
        return catalog_to_csv([e for es in catalog.values() for e in es])
    return "".join(
        f"rank {r}: " + ", ".join(e.name for e in es) + "\n" for r, es in catalog.items()
    )


HANDLERS: dict[str, Callable] = {
    "classes": _classes,
    "sep-order": _sep_order,
    "sep-member": _sep_member,
    "skeleton": _skeleton,
    "structure": _structure,
    "primegraph": _primegraph,
    "series": _series,
    "rank": _spectral("rank"),
    "multiplicity": _spectral("multiplicity"),
    "lambda": _spectral("lambda"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skelkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="JSON output")
        group.add_argument("--dot", action="store_true", help="Graphviz DOT output")
        group.add_argument("--csv", action="store_true", help="CSV output")

    for name, text in GRAPH_COMMANDS.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("input", nargs="?", default="-", help="graph file (default: stdin)")
        p.add_argument("--format", choices=("edgelist", "g6"), default="edgelist")
        if name == "sep-member":
            p.add_argument("--perm", help='permutation in cycle notation, e.g. "(3 4)(1 2)"')
        outputs(p)

    p = sub.add_parser("enumerate", help="all graphs on n vertices up to isomorphism")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--skeletons", action="store_true", help="keep only skeleton structures")
    outputs(p)

    p = sub.add_parser("catalog", help="skeleton structures on 1..n vertices grouped by rank")
    p.add_argument("-n", type=int, required=True)
    outputs(p)
    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    mode = _mode(args)
    try:
        if args.command == "enumerate":
            out = _enumerate(args, mode)
        elif args.command == "catalog":
            out = _catalog(args, mode)
        else:
            out = HANDLERS[args.command](_read_graph(args, stdin), args, mode)
    except CapacityError as exc:
        print(f"skelkit: {exc}", file=stderr)
        return 3
    except (GraphParseError, UsageError, ValueError) as exc:
        print(f"skelkit: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
