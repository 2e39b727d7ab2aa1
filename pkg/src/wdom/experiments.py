"""Experiment protocols: corpus generation, best-of-N heuristic runs, exact
solves, table-style aggregation and performance-profile traces."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from dataclasses import asdict, dataclass, field

from .bounds import all_bounds
from .exact import exact_solve
from .generators import GenSpec, generate, parse_kind
from .graph import WeightedGraph, format_number
from .heuristics import HeuristicConfig, run
from .rng import derive_seed

log = logging.getLogger(__name__)

SOLVERS = ("t3", "t5", "t6", "exact-size", "exact-weight", "exact-lex")

CSV_HEADER = [
    "config", "instance", "n", "m", "delta", "variant",
    "best_size", "best_size_weight", "best_weight", "best_weight_size", "time_s",
]
TRACE_HEADER = ["elapsed_s", "best_size", "best_weight"]


@dataclass
class ExperimentSpec:
    """``corpus`` entries are ``er:<n>:<p>`` or ``sun:<delta>``; each is
    instantiated ``repeats`` times. Per-instance and per-solver seeds are
    derived from ``master_seed`` and the (config, instance, solver) indices.
    ``timing=False`` blanks the time column so output is byte-reproducible."""

    corpus: list[str] = field(default_factory=list)
    solvers: list[str] = field(default_factory=lambda: ["t3", "t5", "t6"])
    iterations: int = 20
    repeats: int = 10
    time_budget: float | None = None
    master_seed: int = 0
    weight_lo: int = 101
    weight_hi: int = 200
    exact_max_n: int = 32
    timing: bool = True

    def __post_init__(self):
        self.solvers = [s.lower() for s in self.solvers]
        for s in self.solvers:
            if s not in SOLVERS:
                raise ValueError(f"unknown solver {s!r}")
        for c in self.corpus:
            parse_kind(c)
        if self.repeats < 0:
            raise ValueError("repeats must be non-negative")

    def instances(self):
        for ci, label in enumerate(self.corpus):
            kw = parse_kind(label)
            for ii in range(self.repeats):
                yield ci, ii, label, GenSpec(
                    weight_lo=self.weight_lo, weight_hi=self.weight_hi,
                    seed=derive_seed(self.master_seed, ci, ii, 0), **kw,
                )


@dataclass
class ResultRow:
    config: str
    instance: int
    n: int
    m: int
    delta: int
    variant: str
    best_size: int | None = None
    best_size_weight: float | None = None
    best_weight: float | None = None
    best_weight_size: int | None = None
    time_s: float | None = None
    witness_by_size: list[int] = field(default_factory=list)
    witness_by_weight: list[int] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    iterations_done: int | None = None
    stopped_by: str | None = None
    clamped: bool = False
    error: str | None = None


@dataclass
class ExperimentResult:
    spec: ExperimentSpec
    rows: list[ResultRow]
    aggregates: list[dict]


def bound_summary(g: WeightedGraph) -> dict:
    out = {}
    for rep in all_bounds(g):
        out[rep.theorem] = {
            "applicable": rep.applicable,
            "intermediate": rep.intermediate_bound,
            "final": rep.final_bound,
            "params": rep.params,
        }
    return out


def solve_instance(g: WeightedGraph, solver: str, seed: int, spec: ExperimentSpec) -> dict:
    """Run one solver on one instance; returns ResultRow fields."""
    if solver.startswith("exact-"):
        t0 = time.perf_counter()
        res = exact_solve(g, solver.split("-", 1)[1], max_n=spec.exact_max_n)
        ids = sorted(v + 1 for v in res.witness)
        return dict(
            best_size=res.size, best_size_weight=res.weight,
            best_weight=res.weight, best_weight_size=res.size,
            time_s=time.perf_counter() - t0,
            witness_by_size=ids, witness_by_weight=ids,
        )
    cfg = HeuristicConfig(
        variant=solver.upper(), iterations=spec.iterations,
        time_budget=spec.time_budget, seed=seed,
    )
    hr = run(g, cfg)
    return dict(
        best_size=hr.best_by_size.size, best_size_weight=hr.best_by_size.weight,
        best_weight=hr.best_by_weight.weight, best_weight_size=hr.best_by_weight.size,
        time_s=hr.elapsed,
        witness_by_size=hr.best_by_size.sorted_ids(1),
        witness_by_weight=hr.best_by_weight.sorted_ids(1),
        iterations_done=hr.iterations_done, stopped_by=hr.stopped_by, clamped=hr.clamped,
    )


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    rows = []
    for ci, ii, label, gs in spec.instances():
        g = generate(gs)
        bounds = bound_summary(g)
        for si, solver in enumerate(spec.solvers):
            row = ResultRow(label, ii, g.n, g.m, g.min_degree, solver, bounds=bounds)
            try:
                fields = solve_instance(g, solver, derive_seed(spec.master_seed, ci, ii, si + 1), spec)
            except ValueError as exc:
                log.warning("%s #%d %s: %s", label, ii, solver, exc)
                row.error = str(exc)
            else:
                for k, v in fields.items():
                    setattr(row, k, v)
            if not spec.timing:
                row.time_s = None
            rows.append(row)
    return ExperimentResult(spec, rows, aggregate(rows, spec.corpus, spec.solvers))


def _mean(xs):
    return sum(xs) / len(xs) if xs else None


def aggregate(rows: list[ResultRow], configs, solvers) -> list[dict]:
    """Means over repeats per (config, solver): best-by-size picks and
    best-by-weight picks separately."""
    out = []
    for c in configs:
        for s in solvers:
            sel = [r for r in rows if r.config == c and r.variant == s and r.error is None]
            if not sel:
                continue
            times = [r.time_s for r in sel if r.time_s is not None]
            out.append({
                "config": c, "variant": s, "count": len(sel),
                "n": _mean([r.n for r in sel]), "m": _mean([r.m for r in sel]),
                "delta": _mean([r.delta for r in sel]),
                "best_size": _mean([r.best_size for r in sel]),
                "best_size_weight": _mean([r.best_size_weight for r in sel]),
                "best_weight": _mean([r.best_weight for r in sel]),
                "best_weight_size": _mean([r.best_weight_size for r in sel]),
                "time_s": _mean(times) if len(times) == len(sel) else None,
            })
    return out


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format_number(v)
    return str(v)


def _time_cell(t) -> str:
    return "" if t is None else f"{t:.3f}"


def experiment_csv(result: ExperimentResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in result.rows:
        w.writerow([_cell(getattr(r, k)) for k in CSV_HEADER[:-1]] + [_time_cell(r.time_s)])
    for a in result.aggregates:
        cells = [a["config"], "mean"] + [_cell(a[k]) for k in CSV_HEADER[2:-1] if k != "variant"]
        cells.insert(5, a["variant"])
        w.writerow(cells + [_time_cell(a["time_s"])])
    return buf.getvalue()


def experiment_json(result: ExperimentResult) -> str:
    rows = []
    for r in result.rows:
        d = asdict(r)
        if d["time_s"] is not None:
            d["time_s"] = round(d["time_s"], 3)
        rows.append(d)
    aggs = [dict(a, time_s=None if a["time_s"] is None else round(a["time_s"], 3)) for a in result.aggregates]
    return json.dumps({"spec": asdict(result.spec), "rows": rows, "aggregates": aggs}, indent=1) + "\n"


def profile(g: WeightedGraph, variant: str, time_budget: float, seed: int = 0) -> list[tuple[float, int, float]]:
    """Improvement trace of a time-budgeted run, closed with a row at the budget."""
    if time_budget <= 0:
        raise ValueError("time budget must be positive")
    hr = run(g, HeuristicConfig(variant=variant, iterations=None, time_budget=time_budget, seed=seed))
    trace = list(hr.trace)
    trace.append((float(time_budget), hr.best_by_size.size, hr.best_by_weight.weight))
    return trace


def trace_csv(trace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRACE_HEADER)
    for t, size, weight in trace:
        w.writerow([f"{t:.3f}", size, format_number(weight)])
    return buf.getvalue()
