"""Triangle enumeration, per-node/per-edge motif degrees, and the two derived
structures: a motif-weighted adjacency matrix and motif-biased walk transitions."""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
import scipy.sparse as sp

from .graph import Graph

__all__ = [
    "MotifSpec",
    "TRIANGLE",
    "MotifStats",
    "count_triangles",
    "WeightedAdjacency",
    "unit_adjacency",
    "build_motif_adjacency",
    "TransitionModel",
    "build_transition_model",
    "uniform_transitions",
]

TransitionMode = Literal["strict", "smoothed", "uniform"]


@dataclass(frozen=True)
class MotifSpec:
    """A small subgraph pattern; only the 3-node triangle is instantiated."""

    kind: str
    node_count: int

    def __post_init__(self) -> None:
        if self.kind != "triangle":
            raise ValueError(f"unsupported motif kind: {self.kind!r}")
        if self.node_count != 3:
            raise ValueError("triangle motif has exactly 3 nodes")


TRIANGLE = MotifSpec("triangle", 3)


@dataclass(frozen=True, eq=False)
class MotifStats:
    """Exact motif participation counts for one graph.

    ``node_degree[i]`` is the number of motif instances containing node i,
    ``edge_degree[(u, v)]`` (canonical u < v, one entry per graph edge) the
    number containing that edge, and ``edge_values`` the same counts aligned
    with the source graph's ``edges`` rows.
    """

    motif: MotifSpec
    node_degree: np.ndarray
    edge_degree: dict[tuple[int, int], int]
    total_motifs: int
    edge_values: np.ndarray = field(repr=False)


def count_triangles(g: Graph, motif: MotifSpec = TRIANGLE) -> MotifStats:
    """Enumerate every triangle exactly once via sorted neighbor intersection.

    For each edge (u, v) the shared-neighbor count |N(u) ∩ N(v)| is the edge's
    motif degree; node degrees and the total follow from the handshake
    identities (each triangle touches 3 edges, and twice per incident node).
    """
    if motif.kind != "triangle":
        raise ValueError("only the triangle motif is implemented")
    n = g.node_count
    ed = np.zeros(g.edge_count, dtype=np.int64)
    for idx in range(g.edge_count):
        u, v = g.edges[idx]
        ed[idx] = np.intersect1d(g.neighbors(u), g.neighbors(v),
                                 assume_unique=True).size
    nd = np.zeros(n, dtype=np.int64)
    np.add.at(nd, g.edges[:, 0], ed)
    np.add.at(nd, g.edges[:, 1], ed)
    assert not np.any(nd % 2), "each triangle meets a node on exactly 2 edges"
    nd //= 2
    total = int(ed.sum()) // 3
    edge_degree = {(int(u), int(v)): int(c) for (u, v), c in zip(g.edges, ed)}
    nd.setflags(write=False)
    ed.setflags(write=False)
    return MotifStats(motif, nd, edge_degree, total, ed)


def _check_stats_match(g: Graph, stats: MotifStats) -> None:
    if len(stats.edge_degree) != g.edge_count or stats.node_degree.shape[0] != g.node_count:
        raise ValueError("motif stats do not match graph (edge/node counts differ)")
    for u, v in g.edges:
        if (int(u), int(v)) not in stats.edge_degree:
            raise ValueError(f"motif stats missing edge ({u}, {v})")


@dataclass(frozen=True, eq=False)
class WeightedAdjacency:
    """Sparse symmetric edge-weight matrix over node pairs.

    ``edge_weights`` is aligned with the source graph's ``edges`` rows;
    ``matrix`` is the full symmetric CSR form.
    """

    node_count: int
    edge_weights: np.ndarray
    matrix: sp.csr_matrix

    def weight(self, u: int, v: int) -> float:
        return float(self.matrix[u, v])

    def write_coo(self, buf: io.TextIOBase, edges: np.ndarray) -> None:
        """Dump one `i j weight` line per canonical edge."""
        for (u, v), w in zip(edges, self.edge_weights):
            buf.write(f"{int(u)} {int(v)} {float(w)!r}\n")


def _assemble(g: Graph, per_edge: np.ndarray) -> sp.csr_matrix:
    rows = np.concatenate([g.edges[:, 0], g.edges[:, 1]])
    cols = np.concatenate([g.edges[:, 1], g.edges[:, 0]])
    data = np.concatenate([per_edge, per_edge]).astype(np.float64)
    mat = sp.csr_matrix((data, (rows, cols)), shape=(g.node_count, g.node_count))
    mat.sort_indices()
    return mat


def unit_adjacency(g: Graph) -> WeightedAdjacency:
    """Plain 0/1 adjacency as a WeightedAdjacency (the unweighted baseline)."""
    w = np.ones(g.edge_count, dtype=np.float64)
    w.setflags(write=False)
    return WeightedAdjacency(g.node_count, w, _assemble(g, w))


def build_motif_adjacency(g: Graph, stats: MotifStats) -> WeightedAdjacency:
    """Boost each edge's unit weight by edge_motif_degree / motif_size.

    Entries: 0 off the edge set, 1 on motif-free edges (connectivity is kept),
    1 + ED/|V_M| on edges inside at least one motif instance.
    """
    _check_stats_match(g, stats)
    vm = stats.motif.node_count
    ed = stats.edge_values.astype(np.float64)
    w = np.where(ed > 0, 1.0 + ed / vm, 1.0)
    w.setflags(write=False)
    return WeightedAdjacency(g.node_count, w, _assemble(g, w))


@dataclass(frozen=True, eq=False)
class TransitionModel:
    """Per-node outgoing probability rows over that node's neighbor list.

    Arrays are CSR-aligned with the source graph: row i occupies
    ``indptr[i]:indptr[i+1]`` of ``probs`` (normalized, sums to 1) and
    ``masses`` (the unnormalized weights the row was built from, which
    second-order walk biasing composes with). Isolated nodes have empty rows.
    """

    node_count: int
    indptr: np.ndarray
    indices: np.ndarray
    probs: np.ndarray
    masses: np.ndarray
    mode: TransitionMode

    def row(self, node: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self.indptr[node], self.indptr[node + 1]
        return self.indices[lo:hi], self.probs[lo:hi]

    def mass_row(self, node: int) -> np.ndarray:
        return self.masses[self.indptr[node]:self.indptr[node + 1]]


def _per_position_values(g: Graph, per_edge: np.ndarray) -> np.ndarray:
    """Spread one value per canonical edge onto both CSR positions."""
    mat = _assemble(g, per_edge.astype(np.float64))
    if not np.array_equal(mat.indices, g.indices):
        raise AssertionError("CSR layout mismatch")
    return mat.data


def _normalize_rows(g: Graph, masses: np.ndarray) -> np.ndarray:
    cum = np.concatenate([[0.0], np.cumsum(masses)])
    row_sums = cum[g.indptr[1:]] - cum[g.indptr[:-1]]
    denom = np.repeat(row_sums, g.degrees)
    probs = np.zeros_like(masses)
    np.divide(masses, denom, out=probs, where=denom > 0)
    return probs


def build_transition_model(
    g: Graph,
    stats: MotifStats,
    mode: TransitionMode = "strict",
) -> TransitionModel:
    """Motif-biased walk transitions.

    ``strict``: P(i -> j) proportional to the edge motif degree ED(i, j); a
    node whose incident edges all have ED 0 falls back to the uniform row
    (the ratio is otherwise undefined). Motif-free edges keep probability 0,
    so strict rows can trap walks away from such edges. ``smoothed``: P
    proportional to the motif-weighted adjacency entries, which are >= 1 on
    every edge, so all neighbors stay reachable.
    """
    _check_stats_match(g, stats)
    if mode == "strict":
        masses = _per_position_values(g, stats.edge_values)
        cum = np.concatenate([[0.0], np.cumsum(masses)])
        row_sums = cum[g.indptr[1:]] - cum[g.indptr[:-1]]
        dead = (row_sums == 0) & (g.degrees > 0)
        if np.any(dead):
            fallback = np.repeat(dead, g.degrees)
            masses = np.where(fallback, 1.0, masses)
    elif mode == "smoothed":
        masses = _per_position_values(g, build_motif_adjacency(g, stats).edge_weights)
    else:
        raise ValueError(f"unknown transition mode: {mode!r}")
    probs = _normalize_rows(g, masses)
    for a in (masses, probs):
        a.setflags(write=False)
    return TransitionModel(g.node_count, g.indptr, g.indices, probs, masses, mode)


def uniform_transitions(g: Graph) -> TransitionModel:
    """Unbiased transitions: every neighbor equally likely (classic walks)."""
    masses = np.ones(g.indices.shape[0], dtype=np.float64)
    probs = _normalize_rows(g, masses)
    for a in (masses, probs):
        a.setflags(write=False)
    return TransitionModel(g.node_count, g.indptr, g.indices, probs, masses, "uniform")
