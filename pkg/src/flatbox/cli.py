"""Command-line entry point: every operation as a JSON-in, JSON-out subcommand.

Exit codes: 0 verdict true / holds (or a plain computation), 1 verdict false,
2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, gallery, helly
from .boxes import BoxFamily, intersection_graph, pierceable, piercing_number
from .boxicity import INFEASIBLE, boxicity, p_boxicity
from .budget import Budget
from .coloring import chromatic_number
from .errors import BudgetExceeded, FlatboxError
from .forbidden import BUDGET_EXCEEDED, FORBIDDEN, analyze_missing_partition, missing_partitions, verify_forbidden
from .graph import Graph, complement, induced_subgraph, make_cycle
from .interval import is_interval_graph
from .slim import SlimDecomposition, check_slim, decomposition_to_realization, realization_to_decomposition

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load(source: str | None, what: str) -> dict:
    """Read JSON from a path, ``-`` for stdin, or an inline document."""
    if source is None:
        raise UsageError(f"missing {what} input (--in)")
    if source.lstrip().startswith("{"):
        text, origin = source, "<inline>"
    elif source == "-":
        text, origin = sys.stdin.read(), "<stdin>"
    else:
        try:
            text, origin = Path(source).read_text(), source
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{origin}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _budget(args) -> Budget:
    return Budget(args.budget_nodes, args.budget_seconds)


def _unwrap(doc, key: str):
    # gallery documents nest the object under a named key
    if isinstance(doc, dict) and isinstance(doc.get(key), dict):
        return doc[key]
    return doc


def _graph(args, attr: str = "input") -> Graph:
    return Graph.from_json(_unwrap(_load(getattr(args, attr), "graph"), "graph"))


def _family(args) -> BoxFamily:
    return BoxFamily.from_json(_unwrap(_load(args.input, "box family"), "family"))


def _decomposition(args) -> SlimDecomposition:
    return SlimDecomposition.from_json(_unwrap(_load(args.input, "decomposition"), "decomposition"))


# -- handlers: each returns (payload, exit code) --------------------------------------


def cmd_graph(args):
    g = _graph(args)
    if args.action == "complement":
        return complement(g).to_json(), EXIT_TRUE
    if args.action == "chromatic":
        chi, coloring = chromatic_number(g)
        return {"chromatic_number": chi, "coloring": {str(v): c for v, c in sorted(coloring.items())}}, EXIT_TRUE
    if not args.vertices:
        raise UsageError("graph induced needs --vertices")
    sub, labels = induced_subgraph(g, [int(x) for x in args.vertices.split(",")])
    return {"graph": sub.to_json(), "labels": labels}, EXIT_TRUE


def cmd_interval(args):
    rec = is_interval_graph(_graph(args))
    if args.action == "realize" and rec:
        return {"intervals": rec.to_json()["intervals"]}, EXIT_TRUE
    return rec.to_json(), EXIT_TRUE if rec else EXIT_FALSE


def cmd_boxes(args):
    family = _family(args)
    if args.action == "graph":
        return intersection_graph(family).to_json(), EXIT_TRUE
    if args.action == "pierce":
        result = pierceable(family, args.n)
        return result.to_json(), EXIT_TRUE if result else EXIT_FALSE
    return {"piercing": piercing_number(family)}, EXIT_TRUE


def cmd_slim(args):
    if args.action == "from-boxes":
        if args.p is None:
            raise UsageError("slim from-boxes needs --p")
        return realization_to_decomposition(_family(args), args.p).to_json(), EXIT_TRUE
    g = _graph(args, "graph")
    dec = _decomposition(args)
    if args.action == "check":
        check = check_slim(g, dec)
        return check.to_json(), EXIT_TRUE if check else EXIT_FALSE
    return decomposition_to_realization(g, dec).to_json(), EXIT_TRUE


def cmd_boxicity(args):
    return boxicity(_graph(args), _budget(args)).to_json(), EXIT_TRUE


def cmd_pboxicity(args):
    result = p_boxicity(_graph(args), args.p, args.d_max, _budget(args))
    return result.to_json(), EXIT_FALSE if result.value == INFEASIBLE else EXIT_TRUE


def cmd_forbidden(args):
    scope = args.scope if args.scope == "all" else int(args.scope)
    cert = verify_forbidden(args.s, args.p, scope, _budget(args))
    code = {FORBIDDEN: EXIT_TRUE, BUDGET_EXCEEDED: EXIT_BUDGET}.get(cert.verdict, EXIT_FALSE)
    return cert.to_json(), code


def cmd_helly(args):
    if args.action == "h":
        if args.m is None:
            raise UsageError("helly h needs --m")
        return {"m": args.m, "h": helly.h_value(args.m)}, EXIT_TRUE
    if args.action == "check":
        if args.h is None:
            raise UsageError("helly check needs --h")
        report = helly.helly_gallai_check(_family(args), args.h, detail=args.detail)
        return report.to_json(), EXIT_TRUE if report.implication_holds else EXIT_FALSE
    if args.action == "lower":
        family = helly.lower_bound_witness(args.m, args.d)
        return {"m": args.m, "family": family.to_json()}, EXIT_TRUE
    s_list = [int(x) for x in args.s.split(",")] if args.s else None
    report = helly.upper_bound_check(args.m, s_list, lambda: _budget(args))
    if "budget-exceeded" in report.items.values():
        return report.to_json(), EXIT_BUDGET
    return report.to_json(), EXIT_TRUE if report.passed else EXIT_FALSE


def cmd_gallery(args):
    if args.action == "list":
        return {"constructions": [{"name": c.name, "description": c.description} for c in gallery.CONSTRUCTIONS.values()]}, EXIT_TRUE
    if not args.name:
        raise UsageError("gallery emit needs a construction name")
    if args.name not in gallery.CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.name!r}")
    return gallery.CONSTRUCTIONS[args.name].to_json(), EXIT_TRUE


def cmd_partition(args):
    if args.scenario:
        sc = gallery.fig7_scenario()
        report = missing_partitions(sc["s"], sc["anchor"], sc["Fs"], sc["J"])
    else:
        dec = _decomposition(args)
        n = dec.Fs[0].n if dec.Fs else 0
        report = analyze_missing_partition(complement(make_cycle(n)), dec, args.k)
    return report.to_json(), EXIT_TRUE if report.all_missing_property else EXIT_FALSE


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="JSON file, '-' for stdin, or an inline JSON document")
    common.add_argument("--out", help="also write the JSON result to this file")
    common.add_argument("--threads", type=int, default=os.cpu_count(), help="accepted for compatibility; searches run serially")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--format", choices=["json"], default="json")

    parser = argparse.ArgumentParser(prog="flatbox", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"flatbox {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="graph primitives")
    p.add_argument("action", choices=["complement", "chromatic", "induced"])
    p.add_argument("--vertices", help="comma-separated labels for 'induced'")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("interval", parents=[common], help="interval graph recognition")
    p.add_argument("action", choices=["check", "realize"])
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("boxes", parents=[common], help="box families")
    p.add_argument("action", choices=["graph", "pierce", "piercing-number"])
    p.add_argument("--n", type=int, default=2, help="number of piercing points for 'pierce'")
    p.set_defaults(func=cmd_boxes)

    p = sub.add_parser("slim", parents=[common], help="slim decompositions")
    p.add_argument("action", choices=["check", "to-boxes", "from-boxes"])
    p.add_argument("--graph", help="graph JSON for 'check' and 'to-boxes'")
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_slim)

    p = sub.add_parser("boxicity", parents=[common], help="exact boxicity")
    p.set_defaults(func=cmd_boxicity)

    p = sub.add_parser("pboxicity", parents=[common], help="exact p-boxicity")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d-max", type=int, default=8)
    p.set_defaults(func=cmd_pboxicity)

    p = sub.add_parser("forbidden", parents=[common], help="certify that a cycle complement has no p-box realization")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--scope", default="all", help="'all' or an ambient dimension d")
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("helly", parents=[common], help="Helly-Gallai numbers for 2-piercing")
    p.add_argument("action", choices=["h", "check", "lower", "upper"])
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--s", help="comma-separated odd cycle lengths for 'upper'")
    p.add_argument("--detail", action="store_true", help="per-subfamily verdicts for 'check'")
    p.set_defaults(func=cmd_helly)

    p = sub.add_parser("gallery", parents=[common], help="stored constructions")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("partition-analyze", parents=[common], help="missing-path partitions of an outer path")
    p.add_argument("--k", type=int, default=1, help="anchor vertex")
    p.add_argument("--scenario", action="store_true", help="use the stored s = 11, d = 5 layout")
    p.set_defaults(func=cmd_partition)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"flatbox: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        payload, code = {"verdict": BUDGET_EXCEEDED, "message": str(exc)}, EXIT_BUDGET
    except FlatboxError as exc:
        print(f"flatbox: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(payload, sort_keys=True)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
