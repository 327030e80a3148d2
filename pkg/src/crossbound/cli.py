"""Command-line entry point: ``crossbound <subcommand> [options]``.

Exit codes: 0 when every check passed, 1 when a theorem check failed,
2 on budget exhaustion or bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable

from . import campaign as campaign_mod
from .bound import build_lemma2, verify_main_theorem
from .crossing import DEFAULT_UPPER, Drawing, crossing_number, is_k_crossing_critical
from .errors import BudgetExhausted, GraphError, TheoremViolation
from .graph import MultiGraph, preprocess_critical, EarlyBound
from .graphio import FORMATS, parse
from .planarity import PlanarizingSet, is_planar, optimal_planarizing_set, skewness
from .render import render_svg
from .rt import rt_find_cycle, validate_trace

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _load(args: argparse.Namespace) -> MultiGraph:
    if args.input is None:
        raise GraphError("--input is required")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    return parse(text, args.format)


def _emit(args: argparse.Namespace, data: dict) -> None:
    if args.json:
        Path(args.json).write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _edge_set(args: argparse.Namespace, g: MultiGraph) -> PlanarizingSet:
    if args.edges:
        try:
            ids = [int(x) for x in args.edges.split(",") if x.strip()]
        except ValueError:
            raise GraphError("--edges takes comma-separated edge ids") from None
        return PlanarizingSet.of(g, ids)
    return optimal_planarizing_set(g, args.k)


def _reduced(g: MultiGraph, k: int) -> MultiGraph:
    pre = preprocess_critical(g, k)
    if isinstance(pre, EarlyBound):
        raise GraphError(f"reduction leaves parallel edges; bound 2k-2={pre.bound} applies directly")
    return pre[0]


def cmd_planar(args: argparse.Namespace) -> int:
    g = _load(args)
    res = is_planar(g)
    print("planar" if res.planar else f"not planar; Kuratowski edges {list(res.witness)}")
    data = {"planar": res.planar, "witness": list(res.witness)}
    if res.planar:
        data["rotation"] = {str(v): list(r) for v, r in sorted(res.embedding.rotation.items())}
    _emit(args, data)
    return EXIT_OK


def cmd_skewness(args: argparse.Namespace) -> int:
    g = _load(args)
    res = skewness(g, budget=args.budget)
    if not res.exact:
        print(f"skewness exceeds budget {args.budget}")
        return EXIT_USAGE
    print(f"skewness {res.value}; remove edges {list(res.witness.edges)}")
    _emit(args, {"skewness": res.value, "edges": list(res.witness.edges)})
    return EXIT_OK


def cmd_crossnum(args: argparse.Namespace) -> int:
    g = _load(args)
    res = crossing_number(g, args.budget)
    if not res.exact:
        print(f"crossing number exceeds budget {args.budget}")
        return EXIT_USAGE
    print(f"crossing number {res.value}")
    print(res.drawing.to_text(), end="")
    _emit(args, {"crossing_number": res.value, "drawing": res.drawing.to_dict()})
    if args.svg:
        render_svg(res.drawing, args.svg)
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    g = _load(args)
    cand = campaign_mod.certify("input", g, args.k, args.budget, args.max_vertices)
    if cand.status == campaign_mod.UNKNOWN:
        print(f"unknown: {cand.reason}")
        return EXIT_USAGE
    cert = cand.certificate
    verdict = "is" if cert.critical else "is not"
    print(f"graph {verdict} {args.k}-crossing-critical (cr={cert.cr})")
    _emit(args, cert.to_dict())
    return EXIT_OK


def cmd_rt_cycle(args: argparse.Namespace) -> int:
    g = _load(args)
    es = _edge_set(args, g)
    cycle, trace = rt_find_cycle(g, es)
    report = validate_trace(trace)
    print(trace.to_text(), end="")
    print(f"cycle {list(cycle.vertices)} special {cycle.apex}")
    _emit(args, {"cycle": cycle.to_dict(), "trace": trace.to_dict(), "valid": report.valid})
    if not report.valid:
        print(f"trace invalid: {report.errors}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_lemma2(args: argparse.Namespace) -> int:
    g = _reduced(_load(args), args.k)
    cert = build_lemma2(g, _edge_set(args, g), args.k)
    for key, val in cert.symbols().items():
        print(f"{key} = {val}")
    for name, ok in cert.checks.items():
        print(f"{'skip' if ok is None else 'ok  ' if ok else 'FAIL'} {name}")
    _emit(args, cert.to_dict())
    return EXIT_OK


def cmd_redraw(args: argparse.Namespace) -> int:
    g = _load(args)
    cert = is_k_crossing_critical(g, args.k, args.budget)
    if not cert.critical:
        print(f"graph is not {args.k}-crossing-critical (cr={cert.cr})")
        return EXIT_USAGE
    report = verify_main_theorem(g, args.k, args.budget)
    for key, val in report.symbols().items():
        print(f"{key} = {val}")
    _emit(args, report.to_dict())
    if args.svg and report.redraw is not None:
        render_svg(report.redraw.drawing, args.svg)
    return EXIT_OK


def cmd_campaign(args: argparse.Namespace) -> int:
    cfg = campaign_mod.load_config(args.config) if args.config else dict(campaign_mod.DEFAULT_CONFIG)
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.budget_given:
        cfg["budget"] = args.budget
    if args.max_vertices_given:
        cfg["max_vertices"] = args.max_vertices
    report = campaign_mod.run_campaign(cfg, workers=args.workers)
    print(report.to_table(), end="")
    if args.json:
        Path(args.json).write_text(report.to_json())
    return report.exit_code


def cmd_render(args: argparse.Namespace) -> int:
    if not args.svg:
        raise GraphError("--svg is required")
    if args.drawing:
        data = json.loads(Path(args.drawing).read_text())
        d = Drawing.from_dict(data.get("drawing", data))
        d.validate()
    else:
        res = crossing_number(_load(args), args.budget)
        if not res.exact:
            print(f"crossing number exceeds budget {args.budget}")
            return EXIT_USAGE
        d = res.drawing
    render_svg(d, args.svg)
    print(f"wrote {args.svg} ({d.crossing_count} crossings)")
    return EXIT_OK


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], int], str]] = {
    "planar": (cmd_planar, "test planarity"),
    "skewness": (cmd_skewness, "fewest edges whose removal leaves a planar graph"),
    "crossnum": (cmd_crossnum, "exact crossing number and an optimal drawing"),
    "critical": (cmd_critical, "certify k-crossing-criticality"),
    "rt-cycle": (cmd_rt_cycle, "find the short cycle and print the procedure trace"),
    "lemma2": (cmd_lemma2, "build the chordless cycle certificate and check its inequalities"),
    "redraw": (cmd_redraw, "run the full construction and report the redrawn graph"),
    "campaign": (cmd_campaign, "run a batch of instances and write a report"),
    "render": (cmd_render, "write an SVG of a drawing"),
}


class _Given(argparse.Action):
    """Store the value and remember that the flag was passed explicitly."""

    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, f"{self.dest}_given", True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossbound", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn, budget_given=False, max_vertices_given=False)
        p.add_argument("--input", metavar="PATH", help="graph file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="edgelist")
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--budget", type=int, default=DEFAULT_UPPER, action=_Given,
                       help="crossing/skewness search limit")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--json", metavar="PATH")
        p.add_argument("--svg", metavar="PATH")
        if name in ("rt-cycle", "lemma2"):
            p.add_argument("--edges", help="comma-separated planarizing edge ids (default: weight-optimal set)")
        if name in ("critical", "campaign"):
            p.add_argument("--max-vertices", type=int, default=campaign_mod.MAX_VERTICES, action=_Given)
        if name == "campaign":
            p.add_argument("--config", metavar="PATH", help="JSON campaign config (default: built-in corpus)")
            p.add_argument("--workers", type=int, default=1)
        if name == "render":
            p.add_argument("--drawing", metavar="PATH", help="drawing JSON as written by crossnum --json")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.k < 1:
        parser.error("--k must be at least 1")
    if args.budget < 0:
        parser.error("--budget must be non-negative")
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GraphError, BudgetExhausted, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
