"""Command line interface.

Outputs one JSON document on stdout (canonical key order; --pretty
indents).  Exit codes: 0 on success, 1 when a property violation was
found (a square, a failed bound, a failed certification), 2 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bounds as bounds_mod
from . import corpus as corpus_mod
from .counting import (
    ListAssignment,
    coloring_from_json,
    coloring_to_json,
    count_colorings,
    count_violations,
    lists_from_json,
)
from .graphs import (
    ElementId,
    GeneralizedGraph,
    count_paths_bound,
    edge,
    enumerate_paths_through,
    graph_from_json,
    PathKind,
    vertex,
)
from .growth import check_growth, claim_family
from .repetition import Regime, find_square, find_violating_path, is_valid
from .resample import resample_color

JOBS_ENV = "THUECOLOR_JOBS"


class UsageError(Exception):
    pass


class PropertyViolation(Exception):
    """Raised with the payload when the checked property fails."""

    def __init__(self, payload: dict):
        super().__init__("property violation")
        self.payload = payload


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as err:
        raise UsageError(
            f"parse error in {path} at line {err.lineno} column {err.colno}: {err.msg}"
        ) from None


def _load_graph(path: str) -> GeneralizedGraph:
    try:
        return graph_from_json(_load_json(path))
    except ValueError as err:
        raise UsageError(f"bad graph in {path}: {err}") from None


def _load_lists(args, g: GeneralizedGraph) -> ListAssignment:
    if getattr(args, "uniform", None) is not None and getattr(args, "lists", None):
        raise UsageError("give either --uniform or --lists, not both")
    if getattr(args, "uniform", None) is not None:
        if args.uniform < 0:
            raise UsageError("--uniform must be nonnegative")
        return ListAssignment.uniform(g, args.uniform)
    if getattr(args, "lists", None):
        try:
            return lists_from_json(_load_json(args.lists), g)
        except ValueError as err:
            raise UsageError(f"bad list assignment in {args.lists}: {err}") from None
    raise UsageError("a list assignment is required (--uniform or --lists)")


def _parse_regime(text: str) -> Regime:
    try:
        return Regime(text)
    except ValueError:
        raise UsageError(
            f"unknown regime {text!r}; use vertex, edge, weak-total or strong-total"
        ) from None


def _parse_element(text: str) -> ElementId:
    kind, sep, idx = text.partition(":")
    if sep and kind in ("v", "e") and idx.lstrip("-").isdigit():
        return vertex(int(idx)) if kind == "v" else edge(int(idx))
    raise UsageError(f"malformed element {text!r}; use v:<index> or e:<index>")


def _parse_sequence(text: str):
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError:
        return text  # plain ASCII word, bytes as colors
    if isinstance(parsed, list):
        if any(not isinstance(c, int) for c in parsed):
            raise UsageError("sequence array must contain only integers")
        return parsed
    if isinstance(parsed, str):
        return parsed
    raise UsageError("sequence must be a JSON integer array or a string")


def _path_json(path) -> dict:
    return {
        "kind": path.kind.value,
        "elements": [str(x) for x in path.elements],
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> dict:
    if args.sequence is not None:
        seq = _parse_sequence(args.sequence)
        hit = find_square(seq)
        payload = {
            "square": None if hit is None else {"start": hit[0], "half_length": hit[1]}
        }
        if hit is not None:
            raise PropertyViolation(payload)
        return payload
    if args.graph is None or args.coloring is None:
        raise UsageError("verify needs either --sequence or a graph with --coloring")
    g = _load_graph(args.graph)
    try:
        coloring = coloring_from_json(_load_json(args.coloring))
    except ValueError as err:
        raise UsageError(f"bad coloring in {args.coloring}: {err}") from None
    regime = _parse_regime(args.regime)
    try:
        valid = is_valid(g, coloring, regime)
    except ValueError as err:
        raise UsageError(str(err)) from None
    payload: dict = {"valid": valid, "violating_path": None}
    if not valid:
        violation = find_violating_path(g, coloring, regime)
        payload["violating_path"] = _path_json(violation)
        raise PropertyViolation(payload)
    return payload


def _cmd_count(args) -> dict:
    g = _load_graph(args.graph)
    lists = _load_lists(args, g)
    regime = _parse_regime(args.regime)
    try:
        n = count_colorings(g, lists, regime)
    except ValueError as err:
        raise UsageError(str(err)) from None
    return {"count": str(n)}


def _cmd_violations(args) -> dict:
    g = _load_graph(args.graph)
    lists = _load_lists(args, g)
    regime = _parse_regime(args.regime)
    x = _parse_element(args.element)
    try:
        n = count_violations(g, lists, regime, x)
    except ValueError as err:
        raise UsageError(str(err)) from None
    return {"count": str(n)}


def _cmd_ratio(args) -> dict:
    g = _load_graph(args.graph)
    lists = _load_lists(args, g)
    x = _parse_element(args.element)
    try:
        claim = claim_family(args.claim).at(args.delta)
        report = check_growth(g, lists, claim, x)
    except ValueError as err:
        raise UsageError(str(err)) from None
    payload = {
        "graph": args.graph,
        "element": str(x),
        "C_G": str(report.lhs),
        "C_Gminus": str(report.count_without),
        "ratio": report.ratio,
        "bound": report.claim.growth_for(x.kind),
        "holds": report.holds,
    }
    if not report.holds:
        raise PropertyViolation(payload)
    return payload


def _cmd_paths(args) -> dict:
    g = _load_graph(args.graph)
    x = _parse_element(args.through)
    try:
        kind = PathKind(args.kind)
    except ValueError:
        raise UsageError(f"unknown path kind {args.kind!r}") from None
    if args.length < 1:
        raise UsageError("--length must be positive")
    try:
        paths = enumerate_paths_through(g, x, kind, args.length)
    except ValueError as err:
        raise UsageError(str(err)) from None
    bound = None
    if args.length % 2 == 0 and g.max_degree >= 1:
        try:
            bound = count_paths_bound(
                g.max_degree, x.kind, kind, args.length // 2, args.total_form
            )
        except ValueError:
            bound = None
    payload: dict = {
        "count": len(paths),
        "bound": bound,
        "holds": None if bound is None else len(paths) <= bound,
    }
    if args.list:
        payload["paths"] = [
            _path_json(p) for p in sorted(paths, key=lambda p: p.sort_key())
        ]
    if payload["holds"] is False:
        raise PropertyViolation(payload)
    return payload


def _cmd_bounds(args) -> dict | None:
    if args.table is not None:
        lo, hi = args.table
        if lo > hi or lo < 1:
            raise UsageError("--table needs 1 <= MIN <= MAX")
        writer = csv.writer(sys.stdout, lineterminator="\n")
        names = list(bounds_mod.bound_names())
        writer.writerow(["delta"] + names)
        for d in range(lo, hi + 1):
            row: list = [d]
            for name in names:
                try:
                    row.append(bounds_mod.eval_bound(name, d))
                except ValueError:
                    row.append("")
            writer.writerow(row)
        return None
    if args.name is None or args.delta is None:
        raise UsageError("bounds needs --name with --delta, or --table MIN MAX")
    try:
        value = bounds_mod.eval_bound(args.name, args.delta)
    except ValueError as err:
        raise UsageError(str(err)) from None
    return {"name": args.name, "delta": args.delta, "value": value}


def _cmd_optimize(args) -> dict:
    preset = bounds_mod.SERIES_PRESETS.get(args.preset)
    if preset is None:
        raise UsageError(
            f"unknown preset {args.preset!r}; use path or weak-total"
        )
    result = bounds_mod.optimize(preset, tol=args.tol)
    payload = {"alpha": result.alpha, "gamma": result.gamma}
    if not result.interior:
        payload["interior"] = False
    return payload


def _cmd_certify(args) -> dict:
    try:
        report = bounds_mod.certify_delta_inequalities(args.delta)
    except ValueError as err:
        raise UsageError(str(err)) from None
    payload = {
        "delta": report.delta,
        "edge_rate": {
            "lhs": report.edge_rate_lhs,
            "margin": report.edge_rate_margin,
            "holds": report.edge_rate_holds,
        },
        "vertex_rate": {
            "lhs": report.vertex_rate_lhs,
            "margin": report.vertex_rate_margin,
            "holds": report.vertex_rate_holds,
        },
        "holds": report.holds,
    }
    if not report.holds:
        raise PropertyViolation(payload)
    return payload


def _cmd_color(args) -> dict:
    g = _load_graph(args.graph)
    if args.colors is not None:
        lists = ListAssignment.uniform(g, args.colors)
    else:
        lists = _load_lists(args, g)
    regime = _parse_regime(args.regime)
    try:
        run = resample_color(g, lists, regime, args.seed, args.max_steps)
    except ValueError as err:
        raise UsageError(str(err)) from None
    payload: dict = {
        "outcome": run.outcome,
        "steps": run.steps_used,
        "algorithm": run.algorithm,
        "seed": run.seed,
    }
    if run.coloring is not None:
        payload["coloring"] = coloring_to_json(run.coloring)
    return payload


def _cmd_corpus(args) -> dict:
    jobs = args.jobs if args.jobs else int(os.environ.get(JOBS_ENV, "1") or "1")
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    members = corpus_mod.builtin_corpus(args.seed)

    def run(member):
        name, g = member
        return corpus_mod.path_dominance_records(name, g, max_half=args.max_half)

    if jobs == 1:
        all_records = [run(m) for m in members]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            all_records = list(pool.map(run, members))
    checks = 0
    violations = []
    for records in all_records:
        for rec in records:
            checks += 1
            if not rec.holds:
                violations.append(
                    {
                        "graph": rec.graph,
                        "element": str(rec.element),
                        "kind": rec.kind.value,
                        "total_form": rec.total_form,
                        "half_length": rec.half_length,
                        "count": rec.count,
                        "bound": rec.bound,
                    }
                )
    payload = {
        "graphs": len(members),
        "checks": checks,
        "violations": violations,
        "ok": not violations,
    }
    if violations:
        raise PropertyViolation(payload)
    return payload


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thuecolor",
        description="Square-free graph coloring: exact counts, bounds, and checks.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a sequence or a coloring for squares")
    p.add_argument("graph", nargs="?", help="graph JSON file")
    p.add_argument("--sequence", help="JSON integer array or ASCII word")
    p.add_argument("--coloring", help="coloring JSON file")
    p.add_argument("--regime", default="vertex")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="count square-free list colorings")
    p.add_argument("graph")
    p.add_argument("--regime", required=True)
    p.add_argument("--uniform", type=int)
    p.add_argument("--lists")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("violations", help="count colorings broken only at one element")
    p.add_argument("graph")
    p.add_argument("--regime", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--uniform", type=int)
    p.add_argument("--lists")
    p.set_defaults(func=_cmd_violations)

    p = sub.add_parser("ratio", help="check a growth claim on one instance")
    p.add_argument("graph")
    p.add_argument("--claim", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--uniform", type=int)
    p.add_argument("--lists")
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("paths", help="enumerate paths through an element")
    p.add_argument("graph")
    p.add_argument("--through", required=True)
    p.add_argument("--kind", required=True, help="vertex, edge or mixed")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--total-form", action="store_true", dest="total_form")
    p.add_argument("--list", action="store_true", help="include the paths themselves")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("bounds", help="evaluate a named bound or emit a CSV table")
    p.add_argument("--name")
    p.add_argument("--delta", type=int)
    p.add_argument("--table", nargs=2, type=int, metavar=("MIN", "MAX"))
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("optimize", help="minimize a preset alpha/gamma objective")
    p.add_argument("preset", help="path or weak-total")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("certify", help="check the large-degree constant inequalities")
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("color", help="run the resampling colorer")
    p.add_argument("graph")
    p.add_argument("--regime", required=True)
    p.add_argument("--colors", type=int)
    p.add_argument("--lists")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=100_000, dest="max_steps")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("corpus", help="path-count dominance sweep over the corpus")
    p.add_argument("--seed", type=int, default=corpus_mod.CORPUS_SEED)
    p.add_argument("--max-half", type=int, default=4, dest="max_half")
    p.add_argument("--jobs", type=int, default=0)
    p.set_defaults(func=_cmd_corpus)

    return parser


def _emit(payload: dict | None, pretty: bool) -> None:
    if payload is None:
        return
    if pretty:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True))


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return 0 if not exc.code else 2
    try:
        payload = args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except PropertyViolation as violation:
        _emit(violation.payload, args.pretty)
        return 1
    _emit(payload, args.pretty)
    return 0


def main() -> None:
    sys.exit(run())
