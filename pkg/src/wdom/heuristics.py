"""Randomized small-weight dominating sets.

One iteration samples an initial set A with per-vertex probabilities, extends
it greedily to a dominating set D and prunes D to a minimal dominating subset.
:func:`run` repeats this and keeps the best set by size and the best by weight.
"""

from __future__ import annotations

import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import REL_SLACK, uniform_probability
from .graph import WeightedGraph, as_mask, column_counts, require_positive_weights
from .rng import substream

VARIANTS = ("T3", "T5", "T6")


class ConditionError(ValueError):
    """Probabilities fall outside [0, 1] and clamping is disabled."""


class ClampWarning(UserWarning):
    pass


@dataclass
class HeuristicConfig:
    variant: str = "T3"
    iterations: int | None = 20
    time_budget: float | None = None
    seed: int = 0
    clamp_probabilities: bool = True
    workers: int = 1

    def __post_init__(self):
        self.variant = self.variant.upper()
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.iterations is None and self.time_budget is None:
            raise ValueError("set iterations or a time budget")
        if self.iterations is not None and self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class Solution:
    vertices: frozenset
    size: int
    weight: float
    found_at: float

    def sorted_ids(self, base: int = 0) -> list[int]:
        return [v + base for v in sorted(self.vertices)]


@dataclass
class HeuristicRun:
    config: HeuristicConfig
    best_by_size: Solution | None = None
    best_by_weight: Solution | None = None
    trace: list[tuple[float, int, float]] = field(default_factory=list)
    iterations_done: int = 0
    clamped: bool = False
    stopped_by: str = "iterations"
    elapsed: float = 0.0


def probabilities(g: WeightedGraph, variant: str, clamp: bool = True, *, min_degree: int | None = None):
    """Per-vertex inclusion probabilities for ``variant``.

    Returns ``(p, clamped)``. ``min_degree`` overrides ``g.min_degree`` (the
    runner passes the minimum over non-isolated vertices).
    """
    delta = g.min_degree if min_degree is None else min_degree
    if delta < 1:
        raise ValueError("probabilities need minimum degree >= 1")
    require_positive_weights(g)
    variant = variant.upper()
    w = g.weights
    if variant == "T3":
        return np.full(g.n, uniform_probability(delta)), False
    if variant == "T5":
        ratio = g.w_max / ((delta + 1) * g.w_ave)
        base = 1.0 - math.exp(math.log(ratio) / delta)
        p = base * g.w_max / w
    elif variant == "T6":
        ratio = g.w_max / ((delta + 1) * g.w_min)
        base = 1.0 - math.exp(math.log(ratio) / delta)
        p = base * (1.0 + (g.w_max - w) / g.w_min)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    bad = (p < -REL_SLACK) | (p > 1.0 + REL_SLACK)
    if bad.any():
        if not clamp:
            raise ConditionError(f"{variant} probabilities leave [0, 1] on {int(bad.sum())} vertices")
        warnings.warn(f"{variant}: clamped {int(bad.sum())} probabilities into [0, 1]", ClampWarning, stacklevel=2)
    return np.clip(p, 0.0, 1.0), bool(bad.any())


def sample_initial(g: WeightedGraph, p_vec, rng: np.random.Generator) -> frozenset:
    """Independent Bernoulli(p_i) inclusion of each vertex."""
    return frozenset(np.flatnonzero(rng.random(g.n) < np.asarray(p_vec)).tolist())


def _greedy_mask(g: WeightedGraph, mask: np.ndarray) -> np.ndarray:
    adj = g.adj
    chosen = mask.copy()
    idx = np.flatnonzero(chosen)
    undominated = ~(chosen | (column_counts(adj, idx) > 0))
    if not undominated.any():
        return chosen
    # cover[v] = |N[v] ∩ U|, kept current as vertices become dominated
    cover = column_counts(adj, np.flatnonzero(undominated)) + undominated
    while undominated.any():
        v = int(np.argmax(cover))
        chosen[v] = True
        newly = adj[v] & undominated
        newly[v] = undominated[v]
        nidx = np.flatnonzero(newly)
        cover -= column_counts(adj, nidx) + newly
        undominated &= ~newly
    return chosen


def greedy_extend(g: WeightedGraph, a) -> frozenset:
    """Add vertices covering the most undominated vertices (closed
    neighbourhoods, ties to the smallest id) until ``a`` dominates."""
    return frozenset(np.flatnonzero(_greedy_mask(g, as_mask(g, a))).tolist())


def _minimal_mask(g: WeightedGraph, mask: np.ndarray) -> np.ndarray:
    adj = g.adj
    keep = mask.copy()
    idx = np.flatnonzero(keep)
    count = column_counts(adj, idx) + keep  # |N[u] ∩ D'|
    if (count == 0).any():
        raise ValueError("input set is not dominating")
    # |N(v) - D| for v in D, fixed against the input set
    outside = g.degrees[idx] - (count[idx] - 1)
    for v in idx[np.lexsort((idx, outside))]:
        closed = adj[v].copy()
        closed[v] = True
        if count[closed].min() >= 2:
            keep[v] = False
            count[closed] -= 1
    return keep


def minimal_subset(g: WeightedGraph, d) -> frozenset:
    """Drop members of the dominating set ``d`` one at a time, in ascending
    order of outside-neighbour count, whenever the rest still dominates."""
    return frozenset(np.flatnonzero(_minimal_mask(g, as_mask(g, d))).tolist())


def run_iteration(g: WeightedGraph, p_vec: np.ndarray, rng: np.random.Generator) -> frozenset:
    a = rng.random(g.n) < p_vec
    return frozenset(np.flatnonzero(_minimal_mask(g, _greedy_mask(g, a))).tolist())


def prepare(g: WeightedGraph, cfg: HeuristicConfig):
    """Probability vector for ``cfg`` with isolated vertices forced to 1."""
    isolated = g.degrees == 0
    if isolated.all():
        return np.ones(g.n), False
    delta = int(g.degrees[~isolated].min())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ClampWarning)
        p, clamped = probabilities(g, cfg.variant, cfg.clamp_probabilities, min_degree=delta)
    p = p.copy()
    p[isolated] = 1.0
    return p, clamped


def _better_size(a: Solution, b: Solution | None) -> bool:
    return b is None or (a.size, a.weight) < (b.size, b.weight)


def _better_weight(a: Solution, b: Solution | None) -> bool:
    return b is None or (a.weight, a.size) < (b.weight, b.size)


def run(g: WeightedGraph, cfg: HeuristicConfig) -> HeuristicRun:
    """Repeat sample -> greedy extension -> minimal pruning.

    Iteration ``i`` draws from ``substream(cfg.seed, i)``, so outcomes do not
    depend on scheduling. With a time budget the budget is checked before each
    iteration starts.
    """
    p_vec, clamped = prepare(g, cfg)
    out = HeuristicRun(config=cfg, clamped=clamped)
    start = time.perf_counter()

    def record(s: frozenset, t: float):
        weight = 0.0
        for v in sorted(s):
            weight += float(g.weights[v])
        sol = Solution(s, len(s), weight, t)
        improved = False
        if _better_size(sol, out.best_by_size):
            out.best_by_size = sol
            improved = True
        if _better_weight(sol, out.best_by_weight):
            out.best_by_weight = sol
            improved = True
        if improved:
            out.trace.append((t, out.best_by_size.size, out.best_by_weight.weight))

    if cfg.workers > 1 and cfg.time_budget is None:
        with ThreadPoolExecutor(cfg.workers) as pool:
            sets = list(pool.map(lambda i: run_iteration(g, p_vec, substream(cfg.seed, i)), range(cfg.iterations)))
        t = time.perf_counter() - start
        for s in sets:
            record(s, t)
        out.iterations_done = cfg.iterations
    else:
        i = 0
        while True:
            if cfg.iterations is not None and i >= cfg.iterations:
                out.stopped_by = "iterations"
                break
            if cfg.time_budget is not None and i > 0 and time.perf_counter() - start >= cfg.time_budget:
                out.stopped_by = "time_budget"
                break
            s = run_iteration(g, p_vec, substream(cfg.seed, i))
            record(s, time.perf_counter() - start)
            i += 1
        out.iterations_done = i
    out.elapsed = time.perf_counter() - start
    return out


def iteration_outcomes(g: WeightedGraph, cfg: HeuristicConfig, indices) -> list[frozenset]:
    """The minimal dominating sets produced by the given iteration indices."""
    p_vec, _ = prepare(g, cfg)
    return [run_iteration(g, p_vec, substream(cfg.seed, i)) for i in indices]
