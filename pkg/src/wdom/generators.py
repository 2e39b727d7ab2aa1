"""Random instances: Erdős–Rényi graphs, sun graphs and uniform integer weights."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

import numpy as np

from .graph import WeightedGraph
from .rng import substream


def gen_er(n: int, p: float, rng: np.random.Generator) -> WeightedGraph:
    """G(n, p) with unit weights. Each unordered pair is an edge independently
    with probability ``p``; pairs are drawn row by row so memory stays O(n^2) bits."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        row = rng.random(n - i - 1) < p
        adj[i, i + 1:] = row
    adj |= adj.T
    return WeightedGraph(adj, np.ones(n), _trusted=True)


def sun_clique_size(delta: int) -> int:
    """floor(delta * ln(delta)), recomputed in extended precision near integers."""
    x = delta * math.log(delta)
    if abs(x - round(x)) < 1e-6:
        with localcontext() as ctx:
            ctx.prec = 50
            return int((Decimal(delta) * Decimal(delta).ln()).to_integral_value(rounding="ROUND_FLOOR"))
    return math.floor(x)


def gen_sun(delta: int, rng: np.random.Generator) -> WeightedGraph:
    """Random sun graph with minimum degree ``delta`` and unit weights.

    Vertices ``0..K-1`` form a clique, ``K = floor(delta ln delta)``; each of
    the ``delta`` vertices ``K..K+delta-1`` is joined to ``delta`` distinct
    clique vertices sampled uniformly without replacement.
    """
    if delta < 3:
        raise ValueError(f"sun graphs need delta >= 3, got {delta}")
    k = sun_clique_size(delta)
    assert delta <= k, "delta exceeds clique size"
    n = k + delta
    adj = np.zeros((n, n), dtype=bool)
    adj[:k, :k] = True
    np.fill_diagonal(adj, False)
    for j in range(delta):
        # Generator.choice without replacement runs a partial Fisher-Yates tail shuffle
        picks = rng.choice(k, size=delta, replace=False)
        adj[k + j, picks] = True
        adj[picks, k + j] = True
    return WeightedGraph(adj, np.ones(n), _trusted=True)


def assign_weights(g: WeightedGraph, lo: int, hi: int, rng: np.random.Generator) -> WeightedGraph:
    """Independent uniform integer weights from ``{lo, ..., hi}``."""
    if lo > hi:
        raise ValueError(f"empty weight range [{lo}, {hi}]")
    w = rng.integers(lo, hi, size=g.n, endpoint=True).astype(np.float64)
    return g.with_weights(w)


@dataclass(frozen=True)
class GenSpec:
    """A reproducible instance recipe.

    ``kind`` is ``"er"`` (uses ``n``, ``p``) or ``"sun"`` (uses ``delta``).
    Topology is drawn from ``substream(seed, 0)`` and weights from
    ``substream(seed, 1)``.
    """

    kind: str
    n: int = 0
    p: float = 0.0
    delta: int = 0
    weight_lo: int = 101
    weight_hi: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.kind == "er":
            if self.n < 1:
                raise ValueError("er needs n >= 1")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("er needs 0 <= p <= 1")
        elif self.kind == "sun":
            if self.delta < 3:
                raise ValueError("sun needs delta >= 3")
        else:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.weight_lo > self.weight_hi or self.weight_lo < 0:
            raise ValueError("weight range must satisfy 0 <= lo <= hi")

    @property
    def label(self) -> str:
        if self.kind == "er":
            return f"er:{self.n}:{self.p!r}"
        return f"sun:{self.delta}"


def generate(spec: GenSpec) -> WeightedGraph:
    topo = substream(spec.seed, 0)
    if spec.kind == "er":
        g = gen_er(spec.n, spec.p, topo)
    else:
        g = gen_sun(spec.delta, topo)
    return assign_weights(g, spec.weight_lo, spec.weight_hi, substream(spec.seed, 1))


def parse_kind(text: str) -> dict:
    """Parse ``er:<n>:<p>`` or ``sun:<delta>`` into GenSpec keyword arguments.
    ``p`` may be written as a fraction, e.g. ``er:100:1/3``."""
    parts = text.split(":")
    if parts[0] == "er" and len(parts) == 3:
        p = parts[2]
        if "/" in p:
            num, den = p.split("/")
            pval = float(num) / float(den)
        else:
            pval = float(p)
        return {"kind": "er", "n": int(parts[1]), "p": pval}
    if parts[0] == "sun" and len(parts) == 2:
        return {"kind": "sun", "delta": int(parts[1])}
    raise ValueError(f"cannot parse instance kind {text!r}; expected er:<n>:<p> or sun:<delta>")
