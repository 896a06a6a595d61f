"""Experiment runner and conjecture probes.

An experiment draws graphs from a generator, runs one module on each and
records whether the module's guarantee held.  Reports are JSON documents
validated against ``REPORT_SCHEMA``; graphs on which a check failed are
written next to the report in the plain graph format.
"""

from __future__ import annotations

import csv
import json
import logging
import subprocess
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

import jsonschema

from .cover import alpha_star, component_cover
from .degree_matching import check_split, degmatch_split
from .errors import InvalidParams, MonoPartError
from .extremal.twopaths import c4free_two_paths, two_path_cover_kpp
from .generators import CATALOG, PRNG_NAME, RANDOM, gen_catalog, gen_random, min_degree, rng_for
from .graph import ColoredGraph, format_graph, independence_number
from .oracle import (
    brute_max_cycle_cover,
    brute_max_two_path_cover,
    brute_two_cycle_cover_exists,
    oracle_cap,
    search_max_cycle_cover,
    search_two_cycle_cover,
)
from .partition import connected_matching_partition

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
VERSION = "0.1.0"

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "build_id", "prng", "config", "trials", "summary", "histograms", "failures"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "build_id": {"type": "string"},
        "prng": {"type": "string"},
        "config": {"type": "object"},
        "trials": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["trial", "seed", "n", "ok", "uncovered"],
                "properties": {
                    "trial": {"type": "integer", "minimum": 0},
                    "seed": {"type": "integer"},
                    "n": {"type": "integer", "minimum": 0},
                    "ok": {"type": "boolean"},
                    "uncovered": {"type": ["integer", "null"]},
                    "error": {"type": ["string", "null"]},
                    "detail": {"type": "object"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "passed", "failed", "rate"],
            "properties": {
                "total": {"type": "integer"},
                "passed": {"type": "integer"},
                "failed": {"type": "integer"},
                "rate": {"type": ["number", "null"]},
            },
        },
        "histograms": {
            "type": "object",
            "additionalProperties": {"type": "object", "additionalProperties": {"type": "integer"}},
        },
        "failures": {"type": "array", "items": {"type": "string"}},
        "figures": {"type": "array", "items": {"type": "string"}},
    },
}


def build_id() -> str:
    try:
        out = subprocess.run(["git", "describe", "--always", "--dirty", "--tags"], capture_output=True,
                             text=True, cwd=Path(__file__).resolve().parent, timeout=5)
        if out.returncode == 0 and out.stdout.strip():
            return f"{VERSION}+{out.stdout.strip()}"
    except (OSError, subprocess.SubprocessError):
        pass
    return VERSION


# -- module evaluators ---------------------------------------------------------------
# Each takes (graph, options) and returns (ok, uncovered, detail).
def _eval_cover(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    cc = component_cover(g)
    star = alpha_star(g)
    alpha = independence_number(g, cap=opts.get("alpha_cap", 40))
    return cc.size == star <= alpha, 0, {"size": cc.size, "alpha_star": star, "alpha": alpha}


def _eval_partition(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    pieces = connected_matching_partition(g)
    alpha = independence_number(g, cap=opts.get("alpha_cap", 40))
    return len(pieces) <= 2 * alpha, 0, {"pieces": len(pieces), "alpha": alpha}


def _eval_degmatch(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    split, trace = degmatch_split(g)
    check_split(g, split)
    return True, 0, {"case": trace.case, "red": len(split.red_edges), "blue": len(split.blue_edges)}


def _eval_twopaths(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    res = c4free_two_paths(g)
    miss = len(res.pair.uncovered)
    ok = miss <= 1 or not res.guaranteed
    detail = {"guaranteed": res.guaranteed, "moves": len(res.trace.moves)}
    if g.n <= opts.get("cap", oracle_cap()):
        best = brute_max_two_path_cover(g, cap=opts.get("cap"))
        detail["oracle"] = best
        ok = ok and res.pair.covered <= best
    return ok, miss, detail


def _eval_kpp(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    res = two_path_cover_kpp(g, opts.get("p", 2))
    miss = len(res.pair.uncovered)
    ok = res.trace.objectives_increase()
    detail = {"moves": len(res.trace.moves)}
    if g.n <= opts.get("cap", oracle_cap()):
        best = brute_max_two_path_cover(g, cap=opts.get("cap"))
        detail["oracle"] = best
        ok = ok and res.pair.covered == best
    return ok, miss, detail


def _eval_cycles(g: ColoredGraph, opts: dict) -> tuple[bool, Optional[int], dict]:
    """How many vertices 2 alpha monochromatic cycles fail to cover (oracle)."""
    alpha = independence_number(g, cap=opts.get("alpha_cap", 40))
    best = brute_max_cycle_cover(g, 2 * alpha, cap=opts.get("cap"))
    miss = g.n - best
    return miss <= opts.get("c", 0), miss, {"alpha": alpha}


EVALUATORS: dict[str, Callable[[ColoredGraph, dict], tuple[bool, Optional[int], dict]]] = {
    "cover": _eval_cover,
    "partition": _eval_partition,
    "degmatch": _eval_degmatch,
    "twopaths": _eval_twopaths,
    "kpp": _eval_kpp,
    "cycles": _eval_cycles,
}


# -- experiment -----------------------------------------------------------------------
@dataclass
class ExperimentConfig:
    module: str
    generator: dict
    trials: int = 0
    seed: int = 0
    workers: int = 1
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        try:
            cfg = cls(module=raw["module"], generator=dict(raw["generator"]),
                      trials=int(raw.get("trials", 0)), seed=int(raw.get("seed", 0)),
                      workers=int(raw.get("workers", 1)), options=dict(raw.get("options", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParams(f"bad experiment config: {exc}") from None
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.module not in EVALUATORS:
            raise InvalidParams(f"unknown module {self.module!r}; choose from {sorted(EVALUATORS)}")
        kind = self.generator.get("family")
        if kind not in RANDOM and kind not in CATALOG:
            raise InvalidParams(f"unknown generator family {kind!r}")
        if self.trials < 0 or self.workers < 1:
            raise InvalidParams("trials must be >= 0 and workers >= 1")

    def to_dict(self) -> dict:
        return {"module": self.module, "generator": self.generator, "trials": self.trials,
                "seed": self.seed, "workers": self.workers, "options": self.options}


def make_graph(generator: dict, seed: int) -> ColoredGraph:
    kind = generator["family"]
    params = dict(generator.get("params", {}))
    if kind in RANDOM:
        return gen_random(kind, seed, **params)
    if kind == "sharpness4":
        params.setdefault("seed", seed)
    return gen_catalog(kind, **params)


def run_trial(cfg: ExperimentConfig, trial: int) -> tuple[dict, Optional[str]]:
    seed = cfg.seed + trial
    g = make_graph(cfg.generator, seed)
    record: dict[str, Any] = {"trial": trial, "seed": seed, "n": g.n, "ok": False, "uncovered": None, "error": None}
    try:
        ok, miss, detail = EVALUATORS[cfg.module](g, cfg.options)
        record.update(ok=bool(ok), uncovered=miss, detail=detail)
    except MonoPartError as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
    except AssertionError as exc:
        record["error"] = f"AssertionError: {exc}"
    text = None if record["ok"] else format_graph(g, comment=f"trial {trial} seed {seed} module {cfg.module}")
    return record, text


def _run_trial_packed(args: tuple[dict, int]) -> tuple[dict, Optional[str]]:
    raw, trial = args
    return run_trial(ExperimentConfig.from_dict(raw), trial)


def run_experiment(config: ExperimentConfig | dict, out_dir: Optional[Path] = None,
                   figures: bool = True) -> dict:
    """Run all trials and return the schema-validated report; artifacts go to ``out_dir``."""
    cfg = config if isinstance(config, ExperimentConfig) else ExperimentConfig.from_dict(config)
    cfg.validate()
    if cfg.workers > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_trial_packed, [(cfg.to_dict(), t) for t in range(cfg.trials)]))
    else:
        results = [run_trial(cfg, t) for t in range(cfg.trials)]
    results.sort(key=lambda r: r[0]["trial"])
    records = [r for r, _ in results]

    failures: list[str] = []
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for rec, text in results:
            if text is not None:
                path = out_dir / f"failure_{rec['trial']:05d}.graph"
                path.write_text(text)
                failures.append(path.name)
    else:
        failures = [f"trial {r['trial']}" for r in records if not r["ok"]]

    passed = sum(r["ok"] for r in records)
    hist = Counter(r["uncovered"] for r in records if r["uncovered"] is not None)
    sizes = Counter(r["n"] for r in records)
    report = {
        "schema_version": SCHEMA_VERSION,
        "build_id": build_id(),
        "prng": PRNG_NAME,
        "config": cfg.to_dict(),
        "trials": records,
        "summary": {"total": len(records), "passed": passed, "failed": len(records) - passed,
                    "rate": passed / len(records) if records else None},
        "histograms": {"uncovered": {str(k): v for k, v in sorted(hist.items())},
                       "n": {str(k): v for k, v in sorted(sizes.items())}},
        "failures": failures,
    }
    if out_dir is not None:
        report["figures"] = []
        if figures and records:
            from .plotting import histogram_figure
            for name in ("uncovered", "n"):
                path = out_dir / f"hist_{name}.png"
                histogram_figure(report["histograms"][name], path, xlabel=name,
                                 title=f"{cfg.module}: {name} over {len(records)} trials")
                report["figures"].append(path.name)
        write_trials_csv(records, out_dir / "trials.csv")
        validate_report(report)
        (out_dir / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True))
    validate_report(report)
    return report


def validate_report(report: dict) -> None:
    jsonschema.validate(report, REPORT_SCHEMA)


def write_trials_csv(records: list[dict], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["trial", "seed", "n", "ok", "uncovered", "error"])
        for r in records:
            w.writerow([r["trial"], r["seed"], r["n"], int(r["ok"]),
                        "" if r["uncovered"] is None else r["uncovered"], r["error"] or ""])


# -- falsification search ------------------------------------------------------------
@dataclass(frozen=True)
class Counterexample:
    conjecture: str
    source: str
    graph: ColoredGraph
    detail: dict

    def to_json(self) -> dict:
        return {"conjecture": self.conjecture, "source": self.source, "detail": self.detail,
                "graph": format_graph(self.graph)}


def _catalog_instances(conjecture: str) -> list[tuple[str, ColoredGraph]]:
    if conjecture == "saconj1":
        out = [(f"ks_blocks(k={k},s={s})", gen_catalog("ks_blocks", k=k, s=s))
               for s in (3, 4, 5) for k in (1, 2, 3) if k * s <= 10]
        out += [("g5", gen_catalog("g5")), ("g6", gen_catalog("g6"))]
        out += [(f"remark2(n={n})", gen_catalog("remark2", n=n)) for n in range(3, 11)]
        out += [(f"sharpness4(m=2,seed={s})", gen_catalog("sharpness4", m=2, seed=s)) for s in range(4)]
        return out
    return []


def _schconj_random(rng, seed: int) -> tuple[str, ColoredGraph]:
    n = int(rng.integers(4, 11))
    need = 3 * n // 4 + 1
    if need > n - 1:
        need = n - 1
    frac = (need - 0.5) / n
    p_red = float(rng.choice([0.2, 0.35, 0.5, 0.65, 0.8]))
    p_remove = float(rng.choice([1.0, 0.5]))
    return f"min_degree(n={n},delta>3n/4,seed={seed})", min_degree(n, frac, seed, p_red=p_red, p_remove=p_remove)


def _saconj1_random(rng, seed: int) -> tuple[str, ColoredGraph]:
    n = int(rng.integers(3, 11))
    p_edge = float(rng.choice([0.3, 0.5, 0.7, 0.9]))
    return f"colored(n={n},p_edge={p_edge},seed={seed})", gen_random("colored", seed, n=n, p_edge=p_edge, p_red=0.5)


def falsify(conjecture: str, budget: int, seed: int = 0, c: int = 0,
            cap: Optional[int] = None) -> Optional[Counterexample]:
    """Search up to ``budget`` instances for a violation confirmed by two independent oracles.

    ``schconj``: delta > 3n/4 yet no red cycle and disjoint blue cycle cover V.
    ``saconj1``: 2 alpha disjoint monochromatic cycles miss more than ``c`` vertices.
    """
    if conjecture not in ("saconj1", "schconj"):
        raise InvalidParams(f"unknown conjecture {conjecture!r}; choose saconj1 or schconj")
    if budget < 0:
        raise InvalidParams("budget must be non-negative")
    rng = rng_for(seed)
    pool = _catalog_instances(conjecture)
    tried = 0
    while tried < budget:
        if pool:
            source, g = pool.pop(0)
        elif conjecture == "schconj":
            source, g = _schconj_random(rng, seed + tried)
        else:
            source, g = _saconj1_random(rng, seed + tried)
        tried += 1
        hit = _check_instance(conjecture, g, c, cap)
        if hit is not None:
            log.info("counterexample candidate from %s confirmed", source)
            return Counterexample(conjecture, source, g, hit)
    return None


def _check_instance(conjecture: str, g: ColoredGraph, c: int, cap: Optional[int]) -> Optional[dict]:
    if conjecture == "schconj":
        if g.n and 4 * g.min_degree() <= 3 * g.n:
            return None
        if brute_two_cycle_cover_exists(g, cap=cap):
            return None
        # independent backtracking route must agree before anything is reported
        if search_two_cycle_cover(g, cap=cap):
            return None
        return {"min_degree": g.min_degree(), "n": g.n}
    alpha = independence_number(g, cap=None)
    k = 2 * alpha
    best = brute_max_cycle_cover(g, k, cap=cap)
    if g.n - best <= c:
        return None
    second = search_max_cycle_cover(g, k, cap=cap)
    if g.n - second <= c:
        return None
    return {"alpha": alpha, "cycles": k, "covered": best, "n": g.n, "c": c}

