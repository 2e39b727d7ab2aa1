"""Covering ILP models of domination and their LP-format serialization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph, format_number, require_positive_weights

KINDS = ("size", "weight", "two_objective", "reduced_weight")
_ALIASES = {"two": "two_objective", "reduced": "reduced_weight"}

# keep LP lines well under the 510-character limit common to LP readers
MAX_LINE = 255


@dataclass(frozen=True)
class IlpModel:
    """minimize sum c_i x_i  s.t.  sum_{i in N[j]} x_i >= 1 for every vertex j.

    ``rows[j]`` lists the 0-based variable indices of constraint j in
    ascending order.
    """

    kind: str
    relaxed: bool
    coefficients: tuple[float, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def objective_value(self, x) -> float:
        total = 0.0
        for c, xi in zip(self.coefficients, x):
            if xi:
                total += c * xi
        return total

    def is_feasible(self, x) -> bool:
        return all(sum(x[i] for i in row) >= 1 for row in self.rows)


def build_model(g: WeightedGraph, kind: str = "size", relaxed: bool = False) -> IlpModel:
    """``size``: unit costs; ``weight``: w_i; ``two_objective``: 1 + w_i/w_G,
    which ranks by size then weight; ``reduced_weight``: the graph's own
    weights, meant for a graph already passed through the two-objective
    reduction."""
    kind = _ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown objective kind {kind!r}")
    if kind == "size":
        coef = np.ones(g.n)
    else:
        require_positive_weights(g)
        if kind == "two_objective":
            coef = 1.0 + g.weights / g.total_weight
        else:
            coef = g.weights
    rows = tuple(tuple(g.closed_neighbors(j).tolist()) for j in range(g.n))
    return IlpModel(kind, relaxed, tuple(float(c) for c in coef), rows)


def _wrap(head: str, terms: list[str], tail: str = "") -> list[str]:
    lines = []
    cur = head
    for t in terms:
        if len(cur) + 1 + len(t) > MAX_LINE:
            lines.append(cur)
            cur = "   " + t
        else:
            cur = f"{cur} {t}"
    if tail:
        if len(cur) + 1 + len(tail) > MAX_LINE:
            lines.append(cur)
            cur = "   " + tail
        else:
            cur = f"{cur} {tail}"
    lines.append(cur)
    return lines


def write_lp(model: IlpModel) -> str:
    """Deterministic LP-format text. Long rows wrap onto indented
    continuation lines."""
    out = ["Minimize"]
    out += _wrap(" obj:", [f"+ {format_number(c)} x{i + 1}" for i, c in enumerate(model.coefficients)])
    out.append("Subject To")
    for j, row in enumerate(model.rows):
        out += _wrap(f" dom{j + 1}:", [f"+ 1 x{i + 1}" for i in row], ">= 1")
    if model.relaxed:
        out.append("Bounds")
        out += [f" 0 <= x{i + 1} <= 1" for i in range(model.n)]
    else:
        out.append("Binaries")
        names = [f"x{i + 1}" for i in range(model.n)]
        out += _wrap(" " + names[0], names[1:])
    out.append("End")
    return "\n".join(out) + "\n"
