"""Criticality certification and end-to-end verification campaigns."""

from __future__ import annotations

import inspect
import json
import logging
import time
from collections.abc import Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .arith import main_bound, within_main_bound
from .bound import verify_main_theorem
from .crossing import DEFAULT_UPPER, CriticalityCertificate, is_k_crossing_critical
from .errors import BudgetExhausted, GraphError, TheoremViolation
from .generators import FAMILIES, generate
from .graph import MultiGraph

log = logging.getLogger(__name__)

MAX_VERTICES = 12

# statuses of a campaign row
OK = "ok"
NOT_CRITICAL = "not critical"
UNKNOWN = "unknown"
VIOLATION = "violation"
ERROR = "error"


@dataclass(frozen=True)
class Candidate:
    name: str
    graph: MultiGraph
    status: str
    certificate: CriticalityCertificate | None = None
    reason: str = ""


def certify(
    name: str, g: MultiGraph, k: int, budget: int = DEFAULT_UPPER, max_vertices: int = MAX_VERTICES
) -> Candidate:
    if g.n > max_vertices:
        return Candidate(name, g, UNKNOWN, reason=f"{g.n} vertices exceed the budget of {max_vertices}")
    if k - 1 > budget:
        return Candidate(name, g, UNKNOWN, reason=f"k-1={k - 1} exceeds the crossing budget {budget}")
    cert = is_k_crossing_critical(g, k, budget)
    return Candidate(name, g, OK if cert.critical else NOT_CRITICAL, cert)


def find_critical(
    candidates: Iterable[tuple[str, MultiGraph]],
    k: int,
    budget: int = DEFAULT_UPPER,
    max_vertices: int = MAX_VERTICES,
) -> list[Candidate]:
    """Certify each candidate; non-critical ones are kept with their status, never dropped."""
    return [certify(name, g, k, budget, max_vertices) for name, g in candidates]


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------

DEFAULT_CONFIG: dict = {
    "seed": 0,
    "budget": DEFAULT_UPPER,
    "max_vertices": MAX_VERTICES,
    "instances": [
        {"name": "K4", "family": "complete", "params": {"n": 4}, "k": 1},
        {"name": "K5", "family": "complete", "params": {"n": 5}, "k": 1},
        {"name": "K6", "family": "complete", "params": {"n": 6}, "k": 3},
        {"name": "K3,3", "family": "complete_bipartite", "params": {"a": 3, "b": 3}, "k": 1},
        {"name": "K3,4", "family": "complete_bipartite", "params": {"a": 3, "b": 4}, "k": 2},
        {"name": "K3,5", "family": "complete_bipartite", "params": {"a": 3, "b": 5}, "k": 4},
        {"name": "Petersen", "family": "petersen", "params": {}, "k": 2},
        {"name": "C7(1,2)", "family": "circulant", "params": {"n": 7, "jumps": [1, 2]}, "k": 1},
        {"name": "planar+2", "family": "random_planar_plus_edges", "params": {"n": 8, "extra": 2}, "k": 1},
    ],
}


@dataclass(frozen=True)
class CampaignRow:
    name: str
    family: str
    k: int
    status: str
    n: int | None = None
    m: int | None = None
    symbols: Mapping = field(default_factory=dict)
    final_crossings: int | None = None
    message: str = ""
    runtime: float = 0.0

    @property
    def bound(self) -> float:
        return main_bound(self.k)

    @property
    def passed(self) -> bool | None:
        if self.final_crossings is None:
            return None
        return within_main_bound(self.final_crossings, self.k)

    def to_dict(self) -> dict:
        # runtime stays out so reports are reproducible byte for byte
        return {
            "name": self.name,
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "status": self.status,
            "symbols": dict(self.symbols),
            "final_crossings": self.final_crossings,
            "bound": round(self.bound, 6),
            "pass": self.passed,
            "message": self.message,
        }


@dataclass(frozen=True)
class CampaignReport:
    config: Mapping
    rows: tuple[CampaignRow, ...]

    def summary(self) -> dict[str, int]:
        out = {s: 0 for s in (OK, NOT_CRITICAL, UNKNOWN, VIOLATION, ERROR)}
        for r in self.rows:
            out[r.status] += 1
        out["passed"] = sum(1 for r in self.rows if r.passed)
        out["total"] = len(self.rows)
        return out

    @property
    def exit_code(self) -> int:
        s = self.summary()
        if s[VIOLATION]:
            return 1
        if s[UNKNOWN] or s[ERROR]:
            return 2
        return 0

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "rows": [r.to_dict() for r in self.rows],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_table(self) -> str:
        head = ("name", "n", "m", "k", "k'", "t", "t'", "l", "h", "cr", "final", "bound", "pass", "status", "secs")
        body = []
        for r in self.rows:
            s = r.symbols
            cells = (
                r.name, r.n, r.m, r.k, s.get("k'"), s.get("t"), s.get("t'"), s.get("l"), s.get("h"),
                s.get("cr"), r.final_crossings, f"{r.bound:.3f}",
                {True: "yes", False: "NO", None: "-"}[r.passed], r.status, f"{r.runtime:.2f}",
            )
            body.append(tuple("-" if c is None else str(c) for c in cells))
        widths = [max(len(row[i]) for row in [head, *body]) for i in range(len(head))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [head, *body]]
        return "\n".join(lines) + "\n"


def _instance_graph(inst: Mapping, seed: int) -> MultiGraph:
    family = inst["family"]
    params = dict(inst.get("params", {}))
    fn = FAMILIES.get(family)
    if fn is not None and "seed" in inspect.signature(fn).parameters:
        params.setdefault("seed", seed)
    return generate(family, **params)


def run_instance(inst: Mapping, seed: int, budget: int, max_vertices: int) -> CampaignRow:
    name, family, k = inst["name"], inst["family"], int(inst["k"])
    start = time.perf_counter()
    n = m = None
    try:
        g = _instance_graph(inst, seed)
        n, m = g.n, g.m
        cand = certify(name, g, k, budget, max_vertices)
        if cand.status != OK:
            return CampaignRow(name, family, k, cand.status, n, m, message=cand.reason,
                               runtime=time.perf_counter() - start)
        report = verify_main_theorem(g, k, budget)
        syms = report.symbols()
        final = report.final_crossings
        if final is None and report.early is not None:
            final = report.early.bound
        return CampaignRow(name, family, k, OK, n, m, syms, final, runtime=time.perf_counter() - start)
    except TheoremViolation as exc:
        status, msg = VIOLATION, str(exc)
    except (GraphError, BudgetExhausted) as exc:
        status, msg = UNKNOWN, str(exc)
    except Exception as exc:  # isolate the row; the campaign carries on
        log.exception("instance %s failed", name)
        status, msg = ERROR, f"{type(exc).__name__}: {exc}"
    return CampaignRow(name, family, k, status, n, m, message=msg, runtime=time.perf_counter() - start)


def _run_packed(args: tuple) -> CampaignRow:
    return run_instance(*args)


def run_campaign(config: Mapping | None = None, workers: int = 1) -> CampaignReport:
    """Run every configured instance; rows come back sorted by instance name."""
    cfg = dict(DEFAULT_CONFIG if config is None else config)
    seed = int(cfg.get("seed", 0))
    budget = int(cfg.get("budget", DEFAULT_UPPER))
    max_vertices = int(cfg.get("max_vertices", MAX_VERTICES))
    instances = list(cfg.get("instances", []))
    names = [inst["name"] for inst in instances]
    if len(set(names)) != len(names):
        raise GraphError("instance names must be unique")
    jobs = [(inst, seed, budget, max_vertices) for inst in instances]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_packed, jobs))
    else:
        rows = [_run_packed(j) for j in jobs]
    rows.sort(key=lambda r: r.name)
    echo = {"seed": seed, "budget": budget, "max_vertices": max_vertices, "instances": instances}
    return CampaignReport(echo, tuple(rows))


def load_config(path: str | Path) -> dict:
    try:
        cfg = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"config is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict) or not isinstance(cfg.get("instances", []), list):
        raise GraphError("config must be an object with an 'instances' list")
    for inst in cfg.get("instances", []):
        missing = {"name", "family", "k"} - set(inst)
        if missing:
            raise GraphError(f"instance {inst} lacks {sorted(missing)}")
    return cfg
