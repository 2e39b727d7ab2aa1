"""Vertex-weighted simple graphs, domination predicates and the ``.wdom`` file format.

Vertices are dense 0-based ids internally. The text format uses 1-based ids::

    c <comment>
    p wdom <n> <m>
    w <id> <weight>
    e <u> <v>
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

#: A set of vertex ids. Any iterable of ints or a boolean mask of length n is
#: accepted where a VertexSet is expected; functions returning sets return frozensets.
VertexSet = frozenset

# rows per block when reducing over the dense adjacency matrix
_CHUNK = 2048


class GraphFormatError(ValueError):
    """Raised for malformed ``.wdom`` text."""


class WeightedGraph:
    """Immutable simple undirected graph with one real weight per vertex.

    Adjacency is held as a read-only dense boolean matrix, so memory is
    ``n**2`` bytes. Degree and weight statistics are computed once at
    construction.
    """

    __slots__ = (
        "adj", "weights", "n", "m", "degrees", "min_degree", "max_degree",
        "total_weight", "w_max", "w_min", "w_ave",
    )

    def __init__(self, adj: np.ndarray, weights: Sequence[float] | np.ndarray, *, _trusted: bool = False):
        adj = np.asarray(adj, dtype=bool)
        w = np.array(weights, dtype=np.float64)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        n = adj.shape[0]
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if w.shape != (n,):
            raise ValueError(f"expected {n} weights, got {w.size}")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if not _trusted:
            if adj.diagonal().any():
                raise ValueError("self-loops are not allowed")
            if not np.array_equal(adj, adj.T):
                raise ValueError("adjacency must be symmetric")
        if adj.flags.writeable:
            adj = adj.copy() if not _trusted else adj
            adj.flags.writeable = False
        w.flags.writeable = False
        degrees = _row_counts(adj)
        degrees.flags.writeable = False

        self.adj = adj
        self.weights = w
        self.n = n
        self.degrees = degrees
        self.m = int(degrees.sum()) // 2
        self.min_degree = int(degrees.min())
        self.max_degree = int(degrees.max())
        self.total_weight = float(w.sum())
        self.w_max = float(w.max())
        self.w_min = float(w.min())
        self.w_ave = self.total_weight / n

    def __setattr__(self, name, value):
        if hasattr(self, "w_ave"):
            raise AttributeError("WeightedGraph is immutable")
        object.__setattr__(self, name, value)

    # aliases matching the usual notation
    @property
    def delta(self) -> int:
        return self.min_degree

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v``."""
        return np.flatnonzero(self.adj[v])

    def closed_neighbors(self, v: int) -> np.ndarray:
        row = self.adj[v].copy()
        row[v] = True
        return np.flatnonzero(row)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def with_weights(self, weights: Sequence[float] | np.ndarray) -> WeightedGraph:
        """Same topology, new weights. The adjacency matrix is shared."""
        return WeightedGraph(self.adj, weights, _trusted=True)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.adj, other.adj)
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"WeightedGraph(n={self.n}, m={self.m}, delta={self.min_degree}, "
            f"Delta={self.max_degree}, w_G={self.total_weight:g})"
        )


def _row_counts(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    out = np.empty(n, dtype=np.int64)
    for lo in range(0, n, _CHUNK):
        out[lo:lo + _CHUNK] = np.count_nonzero(adj[lo:lo + _CHUNK], axis=1)
    return out


def column_counts(adj: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Sum of the selected adjacency rows, i.e. for each vertex the number of
    its neighbors among ``rows``."""
    n = adj.shape[1]
    out = np.zeros(n, dtype=np.int64)
    for lo in range(0, len(rows), _CHUNK):
        out += adj[rows[lo:lo + _CHUNK]].sum(axis=0, dtype=np.int64)
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]], weights: Sequence[float]) -> WeightedGraph:
    """Build a graph from an edge list on vertices ``0..n-1``.

    Self-loops, duplicate edges (in either orientation) and out-of-range ids
    raise ``ValueError``.
    """
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if adj[u, v]:
            raise ValueError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u, v] = adj[v, u] = True
    return WeightedGraph(adj, weights, _trusted=True)


def as_mask(g: WeightedGraph, s) -> np.ndarray:
    """Boolean membership mask for a vertex set given as ids or as a mask."""
    if isinstance(s, np.ndarray) and s.dtype == bool:
        if s.shape != (g.n,):
            raise ValueError("mask length does not match graph order")
        return s
    mask = np.zeros(g.n, dtype=bool)
    ids = np.fromiter((int(v) for v in s), dtype=np.int64)
    if ids.size:
        if ids.min() < 0 or ids.max() >= g.n:
            raise ValueError("vertex id out of range")
        mask[ids] = True
    return mask


def dominated_mask(g: WeightedGraph, s) -> np.ndarray:
    """Mask of N[s]."""
    mask = as_mask(g, s)
    idx = np.flatnonzero(mask)
    dom = mask.copy()
    for lo in range(0, idx.size, _CHUNK):
        dom |= g.adj[idx[lo:lo + _CHUNK]].any(axis=0)
    return dom


def is_dominating(g: WeightedGraph, s) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a member of ``s``."""
    return bool(dominated_mask(g, s).all())


def is_minimal_dominating(g: WeightedGraph, s) -> bool:
    """Dominating, and no single member can be dropped."""
    mask = as_mask(g, s)
    if not is_dominating(g, mask):
        return False
    idx = np.flatnonzero(mask)
    counts = column_counts(g.adj, idx) + mask
    for v in idx:
        closed = g.adj[v].copy()
        closed[v] = True
        if np.all(counts[closed] >= 2):
            return False
    return True


def set_weight(g: WeightedGraph, s) -> float:
    """Total weight of ``s``, summed in ascending vertex order."""
    idx = np.flatnonzero(as_mask(g, s))
    total = 0.0
    for v in idx:
        total += g.weights[v]
    return float(total)


# ---------------------------------------------------------------- file format


def format_number(x: float) -> str:
    """Shortest round-trip decimal; integral values print without a fraction."""
    x = float(x)
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"p wdom {g.n} {g.m}"]
    lines += [f"w {i + 1} {format_number(w)}" for i, w in enumerate(g.weights)]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> WeightedGraph:
    header = None
    weights: dict[int, float] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        tag = tok[0]
        if header is None:
            if tag != "p":
                raise GraphFormatError(f"line {lineno}: expected 'p wdom <n> <m>' header")
            if len(tok) != 4 or tok[1] != "wdom":
                raise GraphFormatError(f"line {lineno}: malformed header")
            header = (_int(tok[2], lineno), _int(tok[3], lineno))
            n = header[0]
            if n < 1 or header[1] < 0:
                raise GraphFormatError(f"line {lineno}: bad counts in header")
            continue
        if tag == "w":
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: malformed weight line")
            i = _int(tok[1], lineno)
            if not 1 <= i <= n:
                raise GraphFormatError(f"line {lineno}: vertex id {i} out of range")
            if i in weights:
                raise GraphFormatError(f"line {lineno}: repeated weight for vertex {i}")
            try:
                weights[i] = float(tok[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad weight {tok[2]!r}") from None
        elif tag == "e":
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) out of range")
            edges.append((u - 1, v - 1))
        elif tag == "p":
            raise GraphFormatError(f"line {lineno}: second header line")
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise GraphFormatError("missing 'p wdom' header")
    n, m = header
    if len(weights) != n:
        missing = sorted(set(range(1, n + 1)) - weights.keys())
        raise GraphFormatError(f"missing weight line for vertex {missing[0]}")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges, [weights[i] for i in range(1, n + 1)])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integer, got {tok!r}") from None


def read_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: WeightedGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(g))


def require_positive_weights(g: WeightedGraph) -> None:
    if not g.w_min > 0:
        raise ValueError("all vertex weights must be positive")
