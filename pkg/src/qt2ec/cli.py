"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or format error,
3 refusal (size caps, disconnected input, infeasible class).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .classes import compute_classes
from .colouring import (
    Colourability,
    classify_colourability,
    count_colourings,
    enumerate_colourings,
    find_homogeneous_witness,
)
from .errors import ContractError, FormatError, RefusalError
from .families import FAMILY_USAGE, family_from_spec
from .graph import (
    Graph,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    to_dot,
)
from .oracle import (
    ALL_CHECKS,
    SweepConfig,
    brute_force_colouring_count,
    brute_force_orientation_count,
    theorem_sweep,
)
from .orientation import enumerate_orientations, orientability, partial_orientation

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

_KIND_NAMES = {
    Colourability.TRIVIAL_ONLY: "TrivialOnly",
    Colourability.UNIQUELY_COLOURABLE: "Unique",
    Colourability.PROPERLY_COLOURABLE: "Properly",
}


def _add_input_arguments(
    sub: argparse.ArgumentParser, out_choices: tuple[str, ...] = ("text", "json")
) -> None:
    sub.add_argument("input", nargs="?", help="graph file, or '-' for stdin")
    sub.add_argument("--family", metavar="SPEC", help=f"generator spec: {FAMILY_USAGE}")
    sub.add_argument(
        "--in",
        dest="in_format",
        choices=["edgelist", "graph6"],
        default="edgelist",
        help="input format (default edgelist)",
    )
    sub.add_argument(
        "--out",
        dest="out_format",
        choices=list(out_choices),
        default="text",
        help="output format (default text)",
    )


def _read_graph(args: argparse.Namespace) -> Graph:
    if (args.input is None) == (args.family is None):
        raise ContractError("exactly one input source required: a file/'-' or --family")
    if args.family is not None:
        return family_from_spec(args.family)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise FormatError(f"cannot read {args.input}: {exc}") from exc
    if args.in_format == "graph6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise FormatError("no graph6 line found in input")
    return parse_edge_list(text)


def _edge_text(g: Graph, index: int) -> str:
    u, v = g.edge(index)
    return f"{g.label(u)}-{g.label(v)}"


def _json_header(g: Graph) -> dict[str, object]:
    record: dict[str, object] = {"schema": "qt2ec/1", "graph6": encode_graph6(g)}
    if g.labels is not None:
        record["labels"] = list(g.labels)
    return record


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _cmd_classes(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    p = compute_classes(g)
    if args.out_format == "json":
        record = _json_header(g)
        record["k"] = p.k
        record["classes"] = [[list(e) for e in p.class_edges(c)] for c in range(p.k)]
        _emit(json.dumps(record, sort_keys=True))
    elif args.out_format == "dot":
        _emit(to_dot(g, p))
    else:
        lines = [f"k={p.k}"]
        for cid in range(p.k):
            edges = " ".join(_edge_text(g, e) for e in p.classes[cid])
            lines.append(f"class {cid}: {edges}")
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_colour(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    count = count_colourings(g)
    colourings = None
    if args.enumerate:
        colourings = ["".join(c.colours) for c in enumerate_colourings(g, cap=args.cap)]
    if args.out_format == "json":
        record = _json_header(g)
        record["count"] = count
        record["edges"] = [list(e) for e in g.edges]
        if colourings is not None:
            record["colourings"] = colourings
        _emit(json.dumps(record, sort_keys=True))
    else:
        lines = [f"count={count}"]
        if colourings is not None:
            lines.append("edges: " + " ".join(_edge_text(g, i) for i in range(g.m)))
            lines.extend(colourings)
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    result = classify_colourability(g)
    name = _KIND_NAMES[result.kind]
    if result.kind is Colourability.PROPERLY_COLOURABLE:
        name = f"Properly({result.class_count})"
    if args.out_format == "json":
        record = _json_header(g)
        record.update(
            {
                "classification": name,
                "k": result.class_count,
                "count": result.colouring_count,
            }
        )
        _emit(json.dumps(record, sort_keys=True))
    else:
        _emit(name)
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    witness = find_homogeneous_witness(g)
    if args.out_format == "json":
        record = _json_header(g)
        record["witness"] = sorted(witness) if witness is not None else None
        _emit(json.dumps(record, sort_keys=True))
    else:
        if witness is None:
            _emit("none")
        else:
            _emit(" ".join(g.label(v) for v in sorted(witness)))
    return EXIT_OK


def _parse_seed_arc(g: Graph, text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ContractError(f"--seed-arc expects 'u,v', got {text!r}")
    return g.vertex_by_label(parts[0].strip()), g.vertex_by_label(parts[1].strip())


def _cmd_orient(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    feas = orientability(g)
    gamma = None
    if args.seed_arc:
        gamma = partial_orientation(g, _parse_seed_arc(g, args.seed_arc))
    orientations = None
    if args.enumerate:
        orientations = [o.arcs() for o in enumerate_orientations(g, cap=args.cap)]
    if args.out_format == "json":
        record = _json_header(g)
        record.update({"orientable": feas.orientable, "k": feas.k, "count": feas.count})
        if gamma is not None:
            record["gamma"] = [list(arc) for arc in gamma.arcs()]
        if orientations is not None:
            record["orientations"] = [[list(a) for a in arcs] for arcs in orientations]
        _emit(json.dumps(record, sort_keys=True))
    elif args.out_format == "dot":
        if gamma is None:
            raise ContractError("dot output for orient requires --seed-arc")
        _emit(to_dot(g, gamma))
    else:
        if feas.orientable:
            lines = [f"orientable, k={feas.k}, count={feas.count}"]
        else:
            lines = ["not orientable, count=0"]
        if gamma is not None:
            lines.append(gamma.format_arcs())
        if orientations is not None:
            for arcs in orientations:
                lines.append("; ".join(f"{g.label(t)} -> {g.label(h)}" for t, h in arcs))
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    if args.family is None:
        raise ContractError("family subcommand requires --family SPEC")
    if args.input is not None:
        raise ContractError("family subcommand takes no input file")
    g = family_from_spec(args.family)
    if args.out_format == "graph6":
        _emit(encode_graph6(g))
    elif args.out_format == "dot":
        _emit(to_dot(g))
    elif args.out_format == "json":
        record = _json_header(g)
        record["n"] = g.n
        record["edges"] = [list(e) for e in g.edges]
        _emit(json.dumps(record, sort_keys=True))
    else:
        _emit(format_edge_list(g))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = frozenset(args.checks.split(",")) if args.checks else None
    cfg = SweepConfig(
        max_n=args.max_n,
        checks=checks,
        sample_n6=args.sample_n6,
        seed=args.seed,
        threads=args.threads,
    )
    report = theorem_sweep(cfg)
    if args.out_format == "json":
        _emit(report.to_json_lines())
    else:
        lines = [f"graphs={report.meta['graphs']} records={len(report.results)}"]
        for name, (passed, failed) in report.summary().items():
            status = "PASS" if failed == 0 else "FAIL"
            lines.append(f"{name}: {status} ({passed} pass, {failed} fail)")
        for failure in report.failures():
            lines.append(f"FAIL {failure.check} on {failure.graph_key}: {failure.witness}")
        _emit("\n".join(lines))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    colourings = brute_force_colouring_count(g)
    orientations = brute_force_orientation_count(g)
    if args.out_format == "json":
        record = _json_header(g)
        record.update({"colourings": colourings, "orientations": orientations})
        _emit(json.dumps(record, sort_keys=True))
    else:
        _emit(f"colourings={colourings}\norientations={orientations}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qt2ec",
        description=(
            "Edge classes, quasi-transitive 2-edge-colourings, and "
            "quasi-transitive orientations of undirected graphs."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("classes", help="print the edge-class partition")
    _add_input_arguments(sub, out_choices=("text", "json", "dot"))
    sub.set_defaults(fn=_cmd_classes)

    sub = subparsers.add_parser("colour", help="count (and enumerate) colourings")
    _add_input_arguments(sub)
    sub.add_argument("--enumerate", action="store_true")
    sub.add_argument("--cap", type=int, default=20, help="class-count cap for enumeration")
    sub.set_defaults(fn=_cmd_colour)

    sub = subparsers.add_parser("classify", help="TrivialOnly | Unique | Properly(k)")
    _add_input_arguments(sub)
    sub.set_defaults(fn=_cmd_classify)

    sub = subparsers.add_parser("witness", help="print a homogeneous witness vertex set")
    _add_input_arguments(sub)
    sub.set_defaults(fn=_cmd_witness)

    sub = subparsers.add_parser("orient", help="orientability, counting, partial orientations")
    _add_input_arguments(sub, out_choices=("text", "json", "dot"))
    sub.add_argument("--seed-arc", metavar="U,V", help="emit the partial orientation generated by arc u->v")
    sub.add_argument("--enumerate", action="store_true")
    sub.add_argument("--cap", type=int, default=20)
    sub.set_defaults(fn=_cmd_orient)

    sub = subparsers.add_parser("family", help="emit a generator graph")
    _add_input_arguments(sub, out_choices=("text", "json", "dot", "graph6"))
    sub.set_defaults(fn=_cmd_family)

    sub = subparsers.add_parser("verify", help="run the theorem sweep")
    sub.add_argument("--max-n", type=int, default=5)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--sample-n6", type=int, default=None)
    sub.add_argument("--checks", help=f"comma list from: {','.join(sorted(ALL_CHECKS))}")
    sub.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("QT2EC_THREADS", "1")),
        help="sweep worker processes (default QT2EC_THREADS or 1)",
    )
    sub.add_argument(
        "--out",
        dest="out_format",
        choices=["text", "json"],
        default="text",
    )
    sub.set_defaults(fn=_cmd_verify)

    sub = subparsers.add_parser("oracle", help="brute-force colouring/orientation counts")
    _add_input_arguments(sub)
    sub.set_defaults(fn=_cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
