"""Immutable undirected simple-graph container, edge-list I/O, summary stats,
and the degree-preserving rewiring null model."""
from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphStats",
    "ParseError",
    "parse_edge_list",
    "load_edge_list",
    "write_edge_list",
    "graph_stats",
    "null_model_rewire",
]

COMMENT_PREFIXES = ("#", "%")


class ParseError(ValueError):
    """Raised for malformed or empty edge-list input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected, unweighted simple graph in CSR form.

    ``edges`` holds each edge once as a (u, v) row with u < v, lexsorted.
    ``indptr``/``indices`` are the usual CSR neighbor arrays; every neighbor
    list is strictly ascending. ``labels[i]`` is the external identifier the
    node carried in its source file (None for synthetic graphs).

    Instances are immutable (arrays are write-protected) and safe to share
    across threads.
    """

    node_count: int
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int]] | np.ndarray,
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a Graph from (u, v) pairs; dedups, drops self-loops, symmetrizes."""
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be (E, 2) int pairs")
        if node_count < 1:
            raise ValueError("node_count must be >= 1")
        if arr.size and (arr.min() < 0 or arr.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        keep = arr[:, 0] != arr[:, 1]
        arr = arr[keep]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        canon = np.unique(np.stack([lo, hi], axis=1), axis=0) if arr.size else arr
        indptr, indices = _build_csr(node_count, canon)
        for a in (canon, indptr, indices):
            a.setflags(write=False)
        lab = tuple(labels) if labels is not None else None
        if lab is not None and len(lab) != node_count:
            raise ValueError("labels length must equal node_count")
        return cls(node_count, canon, indptr, indices, lab)

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, node: int) -> np.ndarray:
        """Sorted neighbor ids of ``node`` (read-only view)."""
        return self.indices[self.indptr[node]:self.indptr[node + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return pos < row.size and row[pos] == v

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def label_of(self, node: int) -> str:
        return self.labels[node] if self.labels is not None else str(node)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.node_count == other.node_count
            and np.array_equal(self.edges, other.edges)
            and self.labels == other.labels
        )

    def __hash__(self) -> int:  # frozen dataclass with custom __eq__
        return hash((self.node_count, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(|V|={self.node_count}, |E|={self.edge_count})"


def _build_csr(node_count: int, canon: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    src = np.concatenate([canon[:, 0], canon[:, 1]])
    dst = np.concatenate([canon[:, 1], canon[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=node_count)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, dst.astype(np.int64)


@dataclass(frozen=True)
class GraphStats:
    """Five summary statistics of a graph."""

    num_nodes: int
    num_edges: int
    max_degree: int
    avg_degree: float
    density: float

    def to_dict(self) -> dict:
        return {
            "num_nodes": self.num_nodes,
            "num_edges": self.num_edges,
            "max_degree": self.max_degree,
            "avg_degree": self.avg_degree,
            "density": self.density,
        }


def parse_edge_list(text: str | bytes | io.IOBase | Iterable[str]) -> Graph:
    """Parse a plain-text edge list into a Graph.

    Delimiter is any run of whitespace or a single comma; lines starting with
    '#' or '%' are comments. Duplicate undirected edges collapse, self-loops
    are dropped, and node ids are remapped to dense 0-based integers in order
    of first appearance (original tokens kept as labels).

    Raises ParseError on a line with fewer than two tokens or when no edges
    survive.
    """
    if isinstance(text, bytes):
        lines: Iterable[str] = text.decode("utf-8").splitlines()
    elif isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = text

    ids: dict[str, int] = {}
    edge_seen: set[tuple[int, int]] = set()
    edge_order: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.replace(",", " ").split()
        if len(tokens) < 2:
            raise ParseError(f"line {lineno}: expected at least 2 tokens, got {len(tokens)}")
        a, b = tokens[0], tokens[1]
        if a == b:
            continue  # self-loop: dropped, ids not registered
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        key = (u, v) if u < v else (v, u)
        if key not in edge_seen:
            edge_seen.add(key)
            edge_order.append(key)
    if not edge_order:
        raise ParseError("no edges")
    labels = list(ids.keys())
    return Graph.from_edges(len(ids), np.asarray(edge_order, dtype=np.int64), labels)


def load_edge_list(path: str | Path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(g: Graph, path_or_buf: str | Path | io.TextIOBase) -> None:
    """Serialize a graph as label pairs, one edge per line.

    Edges are ordered so that node labels are introduced in id order; parsing
    the output therefore reproduces a parsed Graph bit-for-bit (same dense
    ids, same labels). Graphs with isolated nodes cannot be represented.
    """
    if np.any(g.degrees == 0):
        raise ValueError("edge lists cannot represent isolated nodes")
    emitted = np.zeros(g.edge_count, dtype=bool)
    intro_lines: list[tuple[int, int]] = []
    # Edge row index for each canonical pair, for marking introduction edges.
    index_of = {(int(u), int(v)): i for i, (u, v) in enumerate(g.edges)}
    seen = np.zeros(g.node_count, dtype=bool)
    seen[0] = True
    for k in range(1, g.node_count):
        if seen[k]:
            continue
        nbrs = g.neighbors(k)
        smaller = nbrs[nbrs < k]
        if smaller.size:
            j = int(smaller[0])
            intro_lines.append((j, k))
            emitted[index_of[(j, k)]] = True
        else:
            # co-introduced with its smallest (larger) neighbor
            m = int(nbrs[0])
            intro_lines.append((k, m))
            emitted[index_of[(k, m)]] = True
            seen[m] = True
        seen[k] = True

    def _dump(fh) -> None:
        for u, v in intro_lines:
            fh.write(f"{g.label_of(u)} {g.label_of(v)}\n")
        for i, (u, v) in enumerate(g.edges):
            if not emitted[i]:
                fh.write(f"{g.label_of(int(u))} {g.label_of(int(v))}\n")

    if isinstance(path_or_buf, (str, Path)):
        with open(path_or_buf, "w", encoding="utf-8") as fh:
            _dump(fh)
    else:
        _dump(path_or_buf)


def graph_stats(g: Graph) -> GraphStats:
    """Node/edge counts, max and average degree, and density."""
    n, m = g.node_count, g.edge_count
    degs = g.degrees
    density = 2.0 * m / (n * (n - 1)) if n > 1 else 0.0
    return GraphStats(
        num_nodes=n,
        num_edges=m,
        max_degree=int(degs.max()) if n else 0,
        avg_degree=2.0 * m / n,
        density=density,
    )


def null_model_rewire(g: Graph, swaps_per_edge: int, seed: int) -> Graph:
    """Degree-preserving randomization by attempted double-edge swaps.

    Attempts ``swaps_per_edge * |E|`` swaps (u,v)+(x,y) -> (u,x)+(v,y), each
    skipped if it would create a self-loop or a duplicate edge. The degree
    multiset is preserved exactly; output is deterministic per seed. Graphs
    admitting no legal swap come back unchanged.
    """
    if g.edge_count < 2:
        raise ValueError("need at least 2 edges to rewire")
    if swaps_per_edge < 1:
        raise ValueError("swaps_per_edge must be >= 1")
    rng = np.random.default_rng(seed)
    m = g.edge_count
    attempts = swaps_per_edge * m
    picks = rng.integers(0, m, size=(attempts, 2))
    flips = rng.random(attempts) < 0.5

    edges = [(int(u), int(v)) for u, v in g.edges]
    present = set(edges)
    for (i, j), flip in zip(picks, flips):
        if i == j:
            continue
        u, v = edges[i]
        x, y = edges[j]
        if flip:
            x, y = y, x
        if u == x or v == y:
            continue
        e1 = (u, x) if u < x else (x, u)
        e2 = (v, y) if v < y else (y, v)
        if e1 == e2 or e1 in present or e2 in present:
            continue
        present.discard(edges[i])
        present.discard(edges[j])
        present.add(e1)
        present.add(e2)
        edges[i] = e1
        edges[j] = e2
    return Graph.from_edges(g.node_count, np.asarray(edges, dtype=np.int64), g.labels)
