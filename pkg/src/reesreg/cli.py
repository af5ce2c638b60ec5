"""Command line interface.

Commands: classify, gen, regularity, ged, polytope, corpus.  Exit codes:
0 success, 1 corpus assertion failure, 2 usage or input errors, 3 internal
invariant failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import corpus_run
from .decomposition import gallai_edmonds
from .errors import (
    GraphFormatError,
    InstanceTooLargeError,
    InternalInvariantError,
    NoOddCycleError,
)
from .graphs import GENERATOR_FAMILIES, Graph, generate, parse_graph, write_graph
from .polytope import cone_graph, halfspace_system, interior_lattice_points, lattice_points
from .report import build_report

EXIT_OK = 0
EXIT_CORPUS_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _read_graph(spec: str) -> Graph:
    if spec == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(spec).read_text(encoding="utf-8"))


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    report = build_report(g, with_oracle=args.oracle, with_witness=args.witness)
    if args.json:
        print(report.to_json())
        return EXIT_OK
    print(f"n {report.n}  m {report.m}")
    print(f"matching number      {report.mat}")
    print(f"deficiency           {report.deficiency}")
    print(f"bipartite            {report.bipartite}")
    print(f"perfect matching     {report.perfect_matching}")
    print(f"factor critical      {report.factor_critical}")
    print(f"konig                {report.konig}")
    print(f"tutte-berge          {report.tutte_berge}")
    print(f"gallai-edmonds D     {list(report.ge_d)}")
    print(f"gallai-edmonds A     {list(report.ge_a)}")
    print(f"gallai-edmonds C     {list(report.ge_c)}")
    print(f"odd cycle condition  {report.odd_cycle_condition}")
    print(f"rees normal          {report.rees_normal}")
    status = report.regularity.status.value
    if report.regularity.reg is not None:
        print(f"regularity           {report.regularity.reg}")
    else:
        print(f"regularity           n/a ({status})")
    if args.witness:
        if report.tb_witness is not None:
            print(f"tutte-berge witness  {list(report.tb_witness)}")
        else:
            print("tutte-berge witness  none (not tutte-berge)")
    if args.oracle:
        if report.oracle is not None:
            print(
                f"oracle               q0 {report.oracle.q0}, "
                f"witness {list(report.oracle.interior_witness)}, "
                f"reg {report.oracle.reg}"
            )
        else:
            print(f"oracle               {report.oracle_note}")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family.replace("_", "-")
    if family == "disjoint-union":
        if len(args.params) != 2:
            raise ValueError("disjoint-union takes two graph files")
        g = generate(family, _read_graph(args.params[0]), _read_graph(args.params[1]))
    else:
        g = generate(family, *args.params)
    text = write_graph(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_regularity(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    report = build_report(g, with_oracle=args.oracle)
    if args.json:
        out = {
            "regularity": report.to_dict()["regularity"],
            "oracle": report.to_dict()["oracle"],
            "oracle_note": report.oracle_note,
        }
        if not args.oracle:
            del out["oracle"]
            del out["oracle_note"]
        print(json.dumps(out, indent=2))
        return EXIT_OK
    reg = report.regularity
    print(f"status       {reg.status.value}")
    print(f"mat          {reg.mat}")
    print(f"tutte-berge  {reg.tutte_berge}")
    if reg.reg is not None:
        print(f"reg          {reg.reg}")
    if args.oracle:
        if report.oracle is not None:
            agree = report.oracle.reg == reg.reg
            print(f"oracle       q0 {report.oracle.q0}, reg {report.oracle.reg}")
            print(f"agreement    {agree}")
        else:
            print(f"oracle       {report.oracle_note}")
    return EXIT_OK


def _cmd_ged(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    ge = gallai_edmonds(g)
    if args.json:
        print(
            json.dumps(
                {
                    "d": list(ge.d_set),
                    "a": list(ge.a_set),
                    "c": list(ge.c_set),
                    "d_components": [list(c) for c in ge.d_components],
                },
                indent=2,
            )
        )
        return EXIT_OK
    print(f"D             {list(ge.d_set)}")
    print(f"A             {list(ge.a_set)}")
    print(f"C             {list(ge.c_set)}")
    print(f"D components  {[list(c) for c in ge.d_components]}")
    return EXIT_OK


def _cmd_polytope(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    system = halfspace_system(cone_graph(g))
    if args.interior:
        points = interior_lattice_points(system, args.q)
    else:
        points = lattice_points(system, args.q)
    if args.json:
        print(
            json.dumps(
                {
                    "q": args.q,
                    "interior": args.interior,
                    "ambient_n": system.ambient_n,
                    "points": [list(p) for p in points],
                },
                indent=2,
            )
        )
        return EXIT_OK
    kind = "interior lattice points" if args.interior else "lattice points"
    print(f"{kind} of {args.q}P for the cone graph ({len(points)} found)")
    for p in points:
        print(" ".join(str(x) for x in p))
    return EXIT_OK


def _cmd_corpus(args: argparse.Namespace) -> int:
    summary = corpus_run(
        max_n=args.max_n,
        random_samples=args.random,
        seed=args.seed,
    )
    if args.json:
        print(json.dumps(summary.to_dict(), indent=2))
    else:
        print(f"graphs tested      {summary.graphs_tested}")
        print(f"normal             {summary.normal_count}")
        print(f"tutte-berge        {summary.tutte_berge_count}")
        print(f"failures           {len(summary.failures)}")
        for f in summary.failures:
            print(f"  FAIL {f.check} on n={f.n} edges={list(f.edges)}: {f.detail}")
    return EXIT_OK if summary.ok else EXIT_CORPUS_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reesreg",
        description=(
            "Classify graphs and compute the regularity of the Rees algebra "
            "of an edge ideal, with an edge-polytope cross-check."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full classification report for one graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="run the lattice-point oracle")
    p.add_argument("--witness", action="store_true", help="include a Tutte-Berge witness")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("gen", help="generate a graph from a named family")
    p.add_argument("family", help=f"one of: {', '.join(GENERATOR_FAMILIES)}")
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("regularity", help="regularity of the Rees algebra")
    p.add_argument("graph")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_regularity)

    p = sub.add_parser("ged", help="Gallai-Edmonds decomposition")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ged)

    p = sub.add_parser("polytope", help="lattice points of a cone-polytope dilation")
    p.add_argument("graph")
    p.add_argument("--q", type=int, required=True, help="dilation factor")
    p.add_argument("--interior", action="store_true", help="relative interior only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("corpus", help="sweep a graph corpus and verify both routes")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--random", type=int, default=None, metavar="SAMPLES")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphFormatError, NoOddCycleError, InstanceTooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
