"""Command-line front end: ``monopart <command> [options]``.

Exit status: 0 success, 2 violated precondition or bad parameters,
3 internal contradiction (a guarantee failed to hold), 4 input/output error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from .cover import alpha_star, component_cover
from .degree_matching import check_split, degmatch_split
from .errors import CapExceeded, GraphFormatError, InternalContradiction, InvalidParams, PreconditionViolated
from .extremal.longpaths import erdos_gallai_cycle, mono_cycle_quarter
from .extremal.twopaths import c4free_single_path, c4free_two_paths, two_path_cover_kpp
from .generators import CATALOG, RANDOM
from .graph import RED, BLUE, ColoredGraph, format_graph, independence_number, parse_graph
from .harness import ExperimentConfig, falsify, make_graph, run_experiment
from .oracle import brute_max_two_path_cover, brute_min_cycle_partition
from .partition import connected_matching_partition
from .perturbed import PerturbedGraph, perturbed_partition

EXIT_OK, EXIT_PRECONDITION, EXIT_CONTRADICTION, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("monopart")


def _parse_value(raw: str) -> Any:
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            pass
    return raw


def _params(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InvalidParams(f"parameter {item!r} must look like key=value")
        out[key] = _parse_value(value)
    return out


def _load(args) -> tuple[ColoredGraph, frozenset]:
    src = args.input
    try:
        text = sys.stdin.read() if src in (None, "-") else Path(src).read_text()
    except OSError as exc:
        raise IOError(f"cannot read {src}: {exc}") from exc
    return parse_graph(text)


def _emit(args, payload: dict, summary: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        try:
            Path(args.output).write_text(text + "\n")
        except OSError as exc:
            raise IOError(f"cannot write {args.output}: {exc}") from exc
    if args.json:
        print(text)
    else:
        print(summary)


# -- commands -------------------------------------------------------------------------
def cmd_generate(args) -> int:
    params = _params(args.params)
    seed = args.seed or 0
    g = make_graph({"family": args.family, "params": params}, seed)
    text = format_graph(g, comment=f"{args.family} {params} seed={seed}")
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise IOError(f"cannot write {args.output}: {exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cover(args) -> int:
    g, _ = _load(args)
    cc = component_cover(g)
    payload = cc.to_json() | {"alpha_star": alpha_star(g)}
    lines = [f"{len(cc.components)} components cover {g.n} vertices"]
    lines += [f"  {c}: {list(vs)}" for c, vs in cc.components]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_partition(args) -> int:
    g, marks = _load(args)
    if marks or args.eps is not None:
        result = perturbed_partition(PerturbedGraph(g, marks, args.eps))
        payload = result.to_json()
        pieces = result.pieces
        extra = f", {len(result.leftover)} vertices left out"
    else:
        pieces = connected_matching_partition(g)
        payload = {"pieces": [p.to_json() for p in pieces]}
        extra = ""
    lines = [f"{len(pieces)} pieces{extra}"]
    lines += [f"  {p.kind.value} {p.color or '-'}: {list(p.vertices)}" for p in pieces]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_degmatch(args) -> int:
    g, _ = _load(args)
    split, trace = degmatch_split(g)
    check_split(g, split)
    payload = {"split": split.to_json(), "trace": trace.to_json()}
    summary = (f"case {trace.case}: {len(split.red_edges)} red + {len(split.blue_edges)} blue edges\n"
               f"  red: {list(split.red_edges)}\n  blue: {list(split.blue_edges)}")
    _emit(args, payload, summary)
    return EXIT_OK


def cmd_twopaths(args) -> int:
    g, _ = _load(args)
    if args.mode == "single":
        path = c4free_single_path(g)
        payload = {"path": list(path.vertices), "uncovered": sorted(set(range(g.n)) - set(path.vertices))}
        _emit(args, payload, f"path on {len(path.vertices)} of {g.n} vertices: {list(path.vertices)}")
        return EXIT_OK
    res = c4free_two_paths(g) if args.mode == "c4" else two_path_cover_kpp(g, args.p)
    payload = res.pair.to_json() | {"guaranteed": res.guaranteed, "trace": res.trace.to_json()}
    summary = (f"covered {res.pair.covered} of {g.n} ({len(res.trace.moves)} moves"
               f"{'' if res.guaranteed else ', no guarantee for this input'})\n"
               f"  blue: {list(res.pair.blue_path.vertices)}\n  red: {list(res.pair.red_path.vertices)}")
    _emit(args, payload, summary)
    return EXIT_OK


def cmd_cycle(args) -> int:
    g, _ = _load(args)
    if args.quarter:
        cyc, guaranteed = mono_cycle_quarter(g, args.p)
        payload = {"cycle": list(cyc.vertices), "color": cyc.color.value, "guaranteed": guaranteed}
    else:
        color = {"r": RED, "b": BLUE, "any": None}[args.color]
        cyc = erdos_gallai_cycle(g, args.ell, color)
        payload = {"cycle": list(cyc.vertices), "color": None if color is None else color.value, "ell": args.ell}
    _emit(args, payload, f"cycle of length {len(cyc.vertices)}: {list(cyc.vertices)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    """Compare a module's output on the input graph with the exact oracle."""
    g, _ = _load(args)
    cap = args.cap
    checks: dict[str, dict] = {}
    if args.check in ("cover", "all"):
        cc = component_cover(g)
        alpha = independence_number(g, cap=None)
        checks["cover"] = {"size": cc.size, "alpha_star": alpha_star(g), "alpha": alpha,
                           "ok": cc.size == alpha_star(g) <= alpha}
    if args.check in ("partition", "all"):
        pieces = connected_matching_partition(g)
        alpha = independence_number(g, cap=None)
        best = brute_min_cycle_partition(g, cap=cap)
        checks["partition"] = {"pieces": len(pieces), "alpha": alpha, "oracle_cycle_partition": best,
                               "ok": len(pieces) <= 2 * alpha}
    if args.check in ("twopaths", "all"):
        best = brute_max_two_path_cover(g, cap=cap)
        kpp_ok = None
        try:
            kpp = two_path_cover_kpp(g, 2)
            kpp_ok = kpp.pair.covered == best
        except PreconditionViolated:
            pass
        res = c4free_two_paths(g)
        ok = res.pair.covered <= best and (not res.guaranteed or res.pair.covered >= g.n - 1)
        checks["twopaths"] = {"covered": res.pair.covered, "oracle": best, "guaranteed": res.guaranteed,
                              "kpp_matches_oracle": kpp_ok, "ok": ok and kpp_ok is not False}
    all_ok = all(c["ok"] for c in checks.values())
    lines = [f"{name}: {'ok' if c['ok'] else 'MISMATCH'} {c}" for name, c in checks.items()]
    _emit(args, {"checks": checks, "ok": all_ok}, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_CONTRADICTION


def cmd_experiment(args) -> int:
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise IOError(f"cannot read {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidParams(f"config is not valid JSON: {exc}") from None
    else:
        if not args.module or not args.family:
            raise InvalidParams("give --config or both --module and --family")
        raw = {"module": args.module, "generator": {"family": args.family, "params": _params(args.params)}}
    if args.trials is not None:
        raw["trials"] = args.trials
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.workers is not None:
        raw["workers"] = args.workers
    if args.cap is not None:
        raw.setdefault("options", {})["cap"] = args.cap
    cfg = ExperimentConfig.from_dict(raw)
    out_dir = Path(args.output) if args.output else None
    report = run_experiment(cfg, out_dir, figures=not args.no_figures)
    s = report["summary"]
    summary = f"{s['passed']}/{s['total']} trials passed; uncovered histogram {report['histograms']['uncovered']}"
    if out_dir is not None:
        summary += f"\nreport written to {out_dir / 'report.json'}"
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(summary)
    return EXIT_OK


def cmd_falsify(args) -> int:
    hit = falsify(args.conjecture, args.budget, seed=args.seed or 0, c=args.c, cap=args.cap)
    payload = {"conjecture": args.conjecture, "budget": args.budget,
               "counterexample": None if hit is None else hit.to_json()}
    if hit is not None and args.output:
        Path(args.output).with_suffix(".graph").write_text(format_graph(hit.graph, comment=hit.source))
    summary = "no counterexample within budget" if hit is None else f"counterexample from {hit.source}: {hit.detail}"
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(summary)
    return EXIT_OK


# -- argument parsing -----------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="random seed")
    common.add_argument("--input", "-i", default=None, help="graph file ('-' or omitted: stdin)")
    common.add_argument("--output", "-o", default=None, help="output file (or directory for experiment)")
    common.add_argument("--json", action="store_true", help="print JSON instead of a summary")
    common.add_argument("--trials", type=int, default=None, help="number of experiment trials")
    common.add_argument("--cap", type=int, default=None, help="vertex cap for exact oracles")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="monopart", description="Monochromatic cover and partition toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a catalog or random graph")
    p.add_argument("family", choices=sorted(set(CATALOG) | set(RANDOM)))
    p.add_argument("params", nargs="*", help="key=value generator parameters")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("cover", parents=[common], help="minimum monochromatic component cover")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("partition", parents=[common], help="partition into <= 2 alpha monochromatic pieces")
    p.add_argument("--eps", type=float, default=None, help="perturbation level (implied by marked edges)")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("degmatch", parents=[common], help="red + blue connected perfect matching")
    p.set_defaults(func=cmd_degmatch)

    p = sub.add_parser("twopaths", parents=[common], help="blue path + red path covering most vertices")
    p.add_argument("--mode", choices=["c4", "kpp", "single"], default="c4")
    p.add_argument("--p", type=int, default=2, help="forbidden K_{p,p} in the complement (kpp mode)")
    p.set_defaults(func=cmd_twopaths)

    p = sub.add_parser("cycle", parents=[common], help="long cycle from edge density")
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--color", choices=["r", "b", "any"], default="any")
    p.add_argument("--quarter", action="store_true", help="majority-color long cycle")
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("verify", parents=[common], help="compare module output with the exact oracle")
    p.add_argument("--check", choices=["cover", "partition", "twopaths", "all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", parents=[common], help="run a seeded batch and write a report")
    p.add_argument("--config", default=None, help="JSON experiment config")
    p.add_argument("--module", default=None)
    p.add_argument("--family", default=None)
    p.add_argument("--param", dest="params", action="append", default=[], help="key=value generator parameter")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("falsify", parents=[common], help="search for a conjecture counterexample")
    p.add_argument("conjecture", choices=["saconj1", "schconj"])
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--c", type=int, default=0, help="allowed uncovered vertices (saconj1)")
    p.set_defaults(func=cmd_falsify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.cap is not None:
        os.environ["MONO_ORACLE_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except (PreconditionViolated, InvalidParams, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InternalContradiction, AssertionError) as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (GraphFormatError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
