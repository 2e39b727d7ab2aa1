"""Exact domination solvers for small graphs, the two-objective reduction,
LP-relaxation lower bounds and the max-to-min weight transform."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph, require_positive_weights, set_weight

OBJECTIVES = ("size", "weight", "lex")
DEFAULT_MAX_N = 32


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class ExactResult:
    objective: str
    optimum_value: float
    witness: frozenset
    size: int
    weight: float
    nodes_explored: int
    proven: bool = True


@dataclass(frozen=True)
class RelaxationBounds:
    z: float
    upper: int
    lb_gamma: int
    lb_gamma_w_prime: float
    lb_gamma_w_star: float


def _closed_masks(g: WeightedGraph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.neighbors(v).tolist():
            m |= 1 << u
        masks.append(m)
    return masks


class _Search:
    """Depth-first branch and bound over set-cover style branching: the
    lowest undominated vertex u must be covered by some member of N[u]."""

    def __init__(self, g: WeightedGraph, objective: str, weights):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.closed = _closed_masks(g)
        self.w = [float(x) for x in weights]
        self.objective = objective
        self.nodes = 0
        self.best_key = None
        self.best_set = 0

    def key(self, size: int, weight: float):
        if self.objective == "size":
            return (size,)
        if self.objective == "weight":
            return (weight,)
        return (size, weight)

    def lower_key(self, size, weight, undom, allowed):
        best_cover = 0
        min_w = math.inf
        a = allowed
        while a:
            low = a & -a
            v = low.bit_length() - 1
            c = (self.closed[v] & undom).bit_count()
            if c:
                best_cover = max(best_cover, c)
                min_w = min(min_w, self.w[v])
            a ^= low
        if best_cover == 0:
            return None  # some vertex cannot be covered any more
        extra = -(-undom.bit_count() // best_cover)
        u = (undom & -undom).bit_length() - 1
        cand = self.closed[u] & allowed
        need_u = math.inf
        while cand:
            low = cand & -cand
            need_u = min(need_u, self.w[low.bit_length() - 1])
            cand ^= low
        if need_u == math.inf:
            return None
        if self.objective == "size":
            return (size + extra,)
        lw = weight + max(extra * min_w, need_u)
        if self.objective == "weight":
            return (lw,)
        return (size + extra, weight + max(extra * min_w, need_u))

    def solve(self, start_set: int = 0):
        if start_set:
            self._offer(start_set)
        self._branch(0, 0, 0.0, 0, self.full)
        return self.best_set

    def _offer(self, chosen: int):
        size = chosen.bit_count()
        weight = 0.0
        for v in range(self.n):
            if chosen >> v & 1:
                weight += self.w[v]
        k = self.key(size, weight)
        if self.best_key is None or k < self.best_key:
            self.best_key = k
            self.best_set = chosen

    def _branch(self, chosen, dominated, weight, size, allowed):
        self.nodes += 1
        undom = self.full & ~dominated
        if not undom:
            self._offer(chosen)
            return
        lb = self.lower_key(size, weight, undom, allowed)
        if lb is None or (self.best_key is not None and lb >= self.best_key):
            return
        u = (undom & -undom).bit_length() - 1
        cands = []
        c = self.closed[u] & allowed
        while c:
            low = c & -c
            v = low.bit_length() - 1
            cands.append(((self.closed[v] & undom).bit_count(), v))
            c ^= low
        # most new coverage first so good incumbents appear early
        cands.sort(key=lambda t: (-t[0], t[1]))
        for _, v in cands:
            self._branch(chosen | 1 << v, dominated | self.closed[v], weight + self.w[v], size + 1, allowed & ~(1 << v))
            allowed &= ~(1 << v)


def exact_solve(g: WeightedGraph, objective: str = "weight", *, max_n: int = DEFAULT_MAX_N, method: str = "lex") -> ExactResult:
    """Proven optimum for ``objective`` in ``{"size", "weight", "lex"}``.

    ``lex`` minimizes size, then weight among minimum-size sets. With
    ``method="combined"`` it instead minimizes the single objective with
    weights ``1 + w_i / w_G``; both routes give the same optimum.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if g.n > max_n:
        raise SizeLimitError(f"graph has {g.n} vertices; exact search is limited to {max_n}")
    if objective != "size":
        require_positive_weights(g)
    if objective == "lex" and method == "combined":
        reduced = reduce_two_objective(g)
        search = _Search(reduced, "weight", reduced.weights)
    elif objective == "lex" and method != "lex":
        raise ValueError(f"unknown method {method!r}")
    else:
        search = _Search(g, objective, g.weights)
    chosen = search.solve(_greedy_start(g))
    witness = frozenset(v for v in range(g.n) if chosen >> v & 1)
    weight = set_weight(g, witness)
    value = float(len(witness)) if objective == "size" else weight
    return ExactResult(objective, value, witness, len(witness), weight, search.nodes)


def _greedy_start(g: WeightedGraph) -> int:
    from .heuristics import greedy_extend, minimal_subset

    s = minimal_subset(g, greedy_extend(g, ()))
    out = 0
    for v in s:
        out |= 1 << v
    return out


def domination_number(g: WeightedGraph, **kw) -> int:
    return exact_solve(g, "size", **kw).size


def reduce_two_objective(g: WeightedGraph) -> WeightedGraph:
    """Same topology with weights ``1 + w_i / w_G`` (each strictly in (1, 2))."""
    require_positive_weights(g)
    return g.with_weights(1.0 + g.weights / g.total_weight)


def combined_objective(g: WeightedGraph, s) -> float:
    """sum_{i in s} (1 + w_i / w_G), summed in ascending id order."""
    return set_weight(reduce_two_objective(g), s)


def relaxation_bounds(g: WeightedGraph, x, objective: str = "size", *, tol: float = 1e-9) -> RelaxationBounds:
    """Lower bounds from a fractional covering solution ``x``.

    ``z`` is the objective value of ``x`` (``"size"``: sum x_i; ``"two"``:
    sum (1 + w_i/w_G) x_i). The bounds are only valid when ``x`` is optimal
    for the relaxation; only feasibility is checked here.
    """
    xs = np.asarray(x, dtype=np.float64)
    if xs.shape != (g.n,):
        raise ValueError("fractional solution length does not match graph order")
    if np.any(xs < -tol) or np.any(xs > 1 + tol) or np.any(np.isnan(xs)):
        raise ValueError("fractional values must lie in [0, 1]")
    for j in range(g.n):
        if xs[g.closed_neighbors(j)].sum() < 1 - tol:
            raise ValueError(f"covering constraint for vertex {j + 1} is violated")
    if objective == "size":
        z = float(xs.sum())
    elif objective == "two":
        require_positive_weights(g)
        z = float(np.dot(1.0 + g.weights / g.total_weight, xs))
    else:
        raise ValueError(f"unknown relaxation objective {objective!r}")
    upper = int(np.ceil(np.clip(xs, 0.0, 1.0)).sum())
    return RelaxationBounds(
        z=z,
        upper=upper,
        lb_gamma=math.floor(z + tol),
        lb_gamma_w_prime=z,
        lb_gamma_w_star=g.total_weight * (z - upper),
    )


def transform_max_to_min(g: WeightedGraph):
    """Weights ``psi_i = 1 - w_i / w_max`` and the scale ``alpha = 1 / w_max``.

    For every minimum-size dominating set X,
    ``w(X) = w_max * (gamma(G) - psi(X))``, so maximizing w(X) over
    minimum-size sets is minimizing psi(X).
    """
    if g.w_min < 0:
        raise ValueError("weights must be non-negative")
    if g.w_max <= 0:
        raise ValueError("at least one weight must be positive")
    alpha = 1.0 / g.w_max
    return g.with_weights(1.0 - alpha * g.weights), alpha


def parse_fractional(text: str, n: int) -> np.ndarray:
    """Read lines ``x<i> <value>`` (1-based ids); unlisted variables are 0."""
    x = np.zeros(n)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) != 2 or not tok[0].startswith("x"):
            raise ValueError(f"line {lineno}: expected 'x<i> <value>'")
        try:
            i = int(tok[0][1:])
            val = float(tok[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'x<i> <value>'") from None
        if not 1 <= i <= n:
            raise ValueError(f"line {lineno}: variable x{i} out of range")
        x[i - 1] = val
    return x
