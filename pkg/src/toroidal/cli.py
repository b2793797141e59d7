"""Command-line front end for batch decisions, catalog verification,
split enumeration, and the genus oracle.

Exit codes: 0 = query answered (whatever the verdict), 1 = input error,
2 = class violation (some input contains a K3,3), 3 = oracle budget
refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import GenusBudgetExceeded, GraphInputError
from .genus import DEFAULT_BUDGET, count_torus_embeddings, min_genus_bruteforce
from .graphs import Graph, from_edge_list_text, from_graph6, to_graph6
from .isomorphism import is_isomorphic
from .obstructions import (
    MINOR_OBSTRUCTION_NAMES,
    TOPOLOGICAL_OBSTRUCTION_NAMES,
    builtin,
    catalog,
    enumerate_splits,
    verify_minor_obstruction,
    verify_topological_obstruction,
)
from .toroidality import NOT_IN_CLASS, decide_toroidal

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CLASS = 2
EXIT_BUDGET = 3

BUDGET_ENV = "TOROIDAL_GENUS_BUDGET"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from None


def _parse_graphs(text: str, fmt: str, label: str) -> list[tuple[str, Graph]]:
    out = []
    if fmt == "graph6":
        for i, line in enumerate(l for l in text.splitlines() if l.strip()):
            out.append((f"{label}:{i}", from_graph6(line)))
    elif fmt == "edgelist":
        chunks = [c for c in text.split("\n\n") if c.strip()]
        for i, chunk in enumerate(chunks):
            out.append((f"{label}:{i}", from_edge_list_text(chunk)))
    else:
        raise GraphInputError(f"unknown format {fmt!r}")
    return out


def _gather_inputs(args) -> list[tuple[str, Graph]]:
    graphs: list[tuple[str, Graph]] = []
    for name in args.name or ():
        graphs.append((name, builtin(name)))
    for path in args.files or ():
        graphs.extend(_parse_graphs(_read_text(path), args.format, path))
    if not args.name and not args.files:
        graphs.extend(_parse_graphs(_read_text("-"), args.format, "stdin"))
    if not graphs:
        raise GraphInputError("no graphs in input")
    return graphs


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def cmd_decide(args) -> int:
    graphs = _gather_inputs(args)
    payloads = []
    saw_class_violation = False
    for label, g in graphs:
        verdict = decide_toroidal(g)
        if verdict.status == NOT_IN_CLASS:
            saw_class_violation = True
        if args.json:
            payloads.append({"input": label, **verdict.to_payload()})
        else:
            print(f"{label}: {verdict.status} {verdict.case}")
    if args.json:
        print(json.dumps(payloads, indent=2, sort_keys=True))
    return EXIT_CLASS if saw_class_violation else EXIT_OK


def cmd_verify_obstructions(args) -> int:
    names = (
        MINOR_OBSTRUCTION_NAMES
        if args.kind == "minor"
        else TOPOLOGICAL_OBSTRUCTION_NAMES
    )
    verify = (
        verify_minor_obstruction
        if args.kind == "minor"
        else verify_topological_obstruction
    )
    reports = {}
    failures = []
    for name in names:
        report = verify(builtin(name))
        reports[name] = report
        if not report["passes"]:
            failures.append(name)
        if not args.json:
            print(f"{name}: {'PASS' if report['passes'] else 'FAIL'}")
    if args.json:
        print(
            json.dumps(
                {"kind": args.kind, "failures": failures, "reports": reports},
                indent=2,
                sort_keys=True,
            )
        )
    elif failures:
        print(f"failures: {' '.join(failures)}")
    else:
        print(f"all {len(names)} {args.kind} obstructions verified")
    return EXIT_OK


def cmd_splits(args) -> int:
    seeds = [builtin(n) for n in (args.seeds or MINOR_OBSTRUCTION_NAMES)]
    result = enumerate_splits(seeds, ceiling=args.ceiling)
    lines = [to_graph6(g) for g in result]
    if args.json:
        print(json.dumps({"count": len(lines), "graphs": lines}, indent=2))
    else:
        for line in lines:
            print(line)
        print(f"count: {len(lines)}")
    return EXIT_OK


def cmd_genus(args) -> int:
    graphs = _gather_inputs(args)
    budget = _budget(args)
    payloads = []
    try:
        for label, g in graphs:
            if args.count_torus:
                value = count_torus_embeddings(g, budget=budget)
                key = "torus_embeddings"
            else:
                value = min_genus_bruteforce(g, budget=budget)
                key = "genus"
            payloads.append({"input": label, key: value})
            if not args.json:
                print(f"{label}: {key} = {value}")
    except GenusBudgetExceeded as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        print(json.dumps(payloads, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_isomorphic(args) -> int:
    def load(source: str) -> Graph:
        if source in catalog():
            return builtin(source)
        text = _read_text(source)
        stripped = text.strip()
        if "\n" not in stripped and stripped and not stripped[0].isdigit():
            return from_graph6(stripped)
        return from_edge_list_text(text)

    a, b = load(args.a), load(args.b)
    answer = is_isomorphic(a, b)
    print("true" if answer else "false")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toroidal",
        description="Toroidality decisions for graphs with no K3,3-subdivisions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p):
        p.add_argument("files", nargs="*", help="input files ('-' for stdin)")
        p.add_argument(
            "--format",
            choices=("edgelist", "graph6"),
            default="edgelist",
            help="input format (edgelist: 'n m' header then edge lines, "
            "blank-line separated; graph6: one graph per line)",
        )
        p.add_argument(
            "--name",
            action="append",
            help="use a catalog graph (K5, K3,3, M, G1..G11); repeatable",
        )

    p = sub.add_parser("decide", help="decide toroidality, with certificate")
    add_inputs(p)
    p.add_argument("--json", action="store_true", help="emit JSON certificates")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify-obstructions", help="verify the catalog")
    p.add_argument("--kind", choices=("minor", "topological"), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_obstructions)

    p = sub.add_parser("splits", help="regenerate obstructions by vertex splits")
    p.add_argument("--seeds", nargs="*", help="catalog names (default G1..G4)")
    p.add_argument("--ceiling", type=int, default=16, help="vertex-count cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_splits)

    p = sub.add_parser("genus", help="brute-force orientable genus oracle")
    add_inputs(p)
    p.add_argument("--count-torus", action="store_true",
                   help="count inequivalent torus embeddings instead")
    p.add_argument("--budget", type=int, default=None,
                   help=f"rotation budget (default {DEFAULT_BUDGET}, "
                   f"env {BUDGET_ENV})")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("isomorphic", help="test two graphs for isomorphism")
    p.add_argument("a", help="file or catalog name")
    p.add_argument("b", help="file or catalog name")
    p.set_defaults(func=cmd_isomorphic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
