"""Closed-form upper bounds on domination parameters and the exact expected
weight of the random construction ``D = A ∪ (V - N[A])``.

Weighted bounds require ``delta >= 1`` and positive weights; violations of a
bound's weight conditions are reported in :class:`BoundReport`, never clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import WeightedGraph, require_positive_weights

# relative slack when comparing against a condition's threshold
REL_SLACK = 1e-12


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    applicable: bool
    violated: tuple[str, ...] = ()
    params: dict = field(default_factory=dict)
    intermediate_bound: float | None = None
    final_bound: float | None = None


def _root(x: float, delta: int) -> float:
    """x ** (1/delta) as exp(ln(x)/delta)."""
    return math.exp(math.log(x) / delta)


def _shrink(delta: int) -> float:
    """1 - delta / (delta+1)^(1+1/delta)."""
    return 1.0 - delta * math.exp(-(1.0 + 1.0 / delta) * math.log(delta + 1))


def _leq(a: float, b: float) -> bool:
    return a <= b + REL_SLACK * abs(b)


def _require_weighted(g: WeightedGraph) -> int:
    if g.min_degree < 1:
        raise ValueError("weighted bounds need minimum degree >= 1")
    require_positive_weights(g)
    return g.min_degree


def bound_t1(n: int, delta: int) -> float:
    """(ln(delta+1) + 1) / (delta+1) * n."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    return (math.log(delta + 1) + 1.0) / (delta + 1) * n


def bound_t2(n: int, delta: int) -> float:
    """(1 - delta / (1+delta)^(1+1/delta)) * n, for delta >= 1."""
    if delta < 1:
        raise ValueError("bound needs delta >= 1")
    return _shrink(delta) * n


def uniform_probability(delta: int) -> float:
    """1 - (delta+1)^(-1/delta): minimizer of p + (1-p)^(delta+1)."""
    return 1.0 - math.exp(-math.log(delta + 1) / delta)


def bound_t3(g: WeightedGraph) -> BoundReport:
    delta = _require_weighted(g)
    return BoundReport(
        theorem="T3",
        applicable=True,
        params={"p": uniform_probability(delta)},
        final_bound=_shrink(delta) * g.total_weight,
    )


def bound_c4(g: WeightedGraph) -> float:
    delta = _require_weighted(g)
    return (math.log(delta + 1) + 1.0) / (delta + 1) * g.total_weight


def _tail_sum(g: WeightedGraph, p: float) -> float:
    """sum_i w_i (1-p)^(d_i+1)."""
    return float(np.sum(g.weights * np.power(1.0 - p, g.degrees + 1.0)))


def bound_t5(g: WeightedGraph) -> BoundReport:
    """Bound with selection probabilities proportional to w_max / w_i."""
    delta = _require_weighted(g)
    k = g.w_max / g.w_ave
    params = {"k": k}
    violated = []
    if not _leq(k, delta + 1):
        violated.append(f"k = w_max/w_ave = {k:.6g} > delta+1 = {delta + 1}")
        return BoundReport("T5", False, tuple(violated), params)
    p = max(0.0, 1.0 - _root(k / (delta + 1), delta))
    params["p"] = p
    ratio = g.w_min / g.w_max
    if not _leq(p, ratio):
        violated.append(f"p = {p:.6g} > w_min/w_max = {ratio:.6g}")
        return BoundReport("T5", False, tuple(violated), params)
    inter = g.n * p * g.w_max + _tail_sum(g, p)
    final = (1.0 - delta * _root(k, delta) * math.exp(-(1.0 + 1.0 / delta) * math.log(delta + 1))) * k * g.total_weight
    return BoundReport("T5", True, (), params, inter, final)


def bound_t6(g: WeightedGraph) -> BoundReport:
    """Bound with selection probabilities decreasing linearly in w_i."""
    delta = _require_weighted(g)
    z = g.w_max / g.w_min
    params = {"z": z, "alpha": g.w_min + g.w_max}
    if not _leq(z, delta + 1):
        return BoundReport("T6", False, (f"z = w_max/w_min = {z:.6g} > delta+1 = {delta + 1}",), params)
    q = max(0.0, 1.0 - _root(z / (delta + 1), delta))
    params["q"] = q
    inter = q * z * g.total_weight + _tail_sum(g, q)
    final = (1.0 - delta * _root(z, delta) * math.exp(-(1.0 + 1.0 / delta) * math.log(delta + 1))) * z * g.total_weight
    return BoundReport("T6", True, (), params, inter, final)


def all_bounds(g: WeightedGraph) -> list[BoundReport]:
    """Every bound for ``g``; bounds whose preconditions fail come back as
    inapplicable reports carrying the reason."""
    delta = g.min_degree
    out = [BoundReport("T1", True, (), {}, None, bound_t1(g.n, delta))]
    try:
        out.append(BoundReport("T2", True, (), {}, None, bound_t2(g.n, delta)))
    except ValueError as exc:
        out.append(BoundReport("T2", False, (str(exc),)))
    for name, fn in (("T3", bound_t3), ("C4", bound_c4), ("T5", bound_t5), ("T6", bound_t6)):
        try:
            res = fn(g)
        except ValueError as exc:
            out.append(BoundReport(name, False, (str(exc),)))
            continue
        out.append(res if isinstance(res, BoundReport) else BoundReport(name, True, (), {}, None, res))
    return out


def expected_weight(g: WeightedGraph, p_vec) -> float:
    """E[w(A ∪ B)] where A includes vertex i independently with probability
    p_i and B = V - N[A]."""
    p = np.asarray(p_vec, dtype=np.float64)
    if p.shape != (g.n,):
        raise ValueError("probability vector length does not match graph order")
    if np.any(p < 0) or np.any(p > 1) or np.any(np.isnan(p)):
        raise ValueError("probabilities must lie in [0, 1]")
    keep = 1.0 - p
    miss = np.empty(g.n)
    step = 1024
    for lo in range(0, g.n, step):
        rows = g.adj[lo:lo + step]
        miss[lo:lo + step] = np.where(rows, keep, 1.0).prod(axis=1) * keep[lo:lo + step]
    return float(np.dot(g.weights, p) + np.dot(g.weights, miss))
