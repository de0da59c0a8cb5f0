"""Embeddings from the symmetric normalized Laplacian's low eigenvectors."""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .embedding import EmbeddingMatrix
from .graph import Graph
from .motifs import WeightedAdjacency, unit_adjacency

__all__ = ["normalized_laplacian", "smallest_eigenpairs", "train_spectral"]

RESIDUAL_TOL = 1e-6
DENSE_CUTOFF = 256  # below this size ARPACK buys nothing over LAPACK


def normalized_laplacian(weights: WeightedAdjacency) -> sp.csr_matrix:
    """I - D^{-1/2} W D^{-1/2}; rows of weighted degree zero stay zero off-diagonal."""
    w = weights.matrix.tocsr().astype(np.float64)
    deg = np.asarray(w.sum(axis=1)).ravel()
    inv_sqrt = np.zeros_like(deg)
    nz = deg > 0
    inv_sqrt[nz] = 1.0 / np.sqrt(deg[nz])
    d_half = sp.diags(inv_sqrt)
    lap = sp.eye(weights.node_count, format="csr") - d_half @ w @ d_half
    return lap.tocsr()


def smallest_eigenpairs(
    lap: sp.csr_matrix, k: int, seed: int = 0
) -> tuple[np.ndarray, np.ndarray]:
    """k smallest eigenvalues (ascending) and unit eigenvectors of a symmetric
    PSD matrix. Falls back to dense LAPACK when the iterative solver cannot
    be used (k too close to n, or no convergence)."""
    n = lap.shape[0]
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    if n <= DENSE_CUTOFF or k >= n - 1:
        vals, vecs = np.linalg.eigh(lap.toarray())
        return vals[:k], vecs[:, :k]
    v0 = np.random.default_rng(seed).random(n)
    try:
        vals, vecs = eigsh(lap, k=k, which="SA", v0=v0)
    except ArpackNoConvergence:
        vals, vecs = np.linalg.eigh(lap.toarray())
        return vals[:k], vecs[:, :k]
    order = np.argsort(vals)
    return vals[order], vecs[:, order]


def _fix_signs(vecs: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """First component of magnitude above tol made positive, per column."""
    vecs = vecs.copy()
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        nz = np.flatnonzero(np.abs(col) > tol)
        if nz.size and col[nz[0]] < 0:
            vecs[:, j] = -col
    return vecs


def _check_residuals(lap, vals, vecs) -> None:
    res = lap @ vecs - vecs * vals[None, :]
    worst = float(np.linalg.norm(res, axis=0).max()) if vals.size else 0.0
    if worst > RESIDUAL_TOL:
        raise RuntimeError(f"eigenpair residual {worst:.2e} exceeds {RESIDUAL_TOL}")


def train_spectral(
    g: Graph,
    weights: WeightedAdjacency | None,
    dim: int,
    seed: int | None = None,
) -> EmbeddingMatrix:
    """Rows are the first `dim` nontrivial eigenvector coordinates, computed
    per connected component (each component contributes its own trivial
    zero eigenpair, which is dropped). Components with fewer than dim + 1
    nodes get zero padding in the missing columns."""
    if weights is None:
        weights = unit_adjacency(g)
    if dim >= g.node_count:
        raise ValueError(f"dim {dim} must be < node count {g.node_count}")
    seed = 0 if seed is None else seed
    n_comp, comp_labels = connected_components(weights.matrix, directed=False)
    out = np.zeros((g.node_count, dim))
    for c in range(n_comp):
        nodes = np.flatnonzero(comp_labels == c)
        m = nodes.size
        if m == 1:
            continue
        sub = WeightedAdjacencyView(weights, nodes)
        lap = normalized_laplacian(sub)
        k = min(dim, m - 1) + 1  # + trivial pair
        vals, vecs = smallest_eigenpairs(lap, k, seed=seed + c)
        _check_residuals(lap, vals, vecs)
        kept = _fix_signs(vecs[:, 1:])
        out[nodes, : kept.shape[1]] = kept
    return EmbeddingMatrix(out, {"trainer": "spectral", "dim": dim, "seed": seed})


class WeightedAdjacencyView:
    """Restriction of a weighted adjacency to a node subset (duck-typed)."""

    def __init__(self, weights: WeightedAdjacency, nodes: np.ndarray):
        self.matrix = weights.matrix.tocsr()[np.ix_(nodes, nodes)]
        self.node_count = nodes.size
