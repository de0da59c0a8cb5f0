"""Edge-sampling embeddings with first- and second-order proximity.

Edges are drawn with probability proportional to their weight (all ones for
the unweighted variant), a direction is flipped uniformly, and the endpoint
pair is trained against weighted-degree^0.75 negatives. "first" shares one
matrix for both roles, "second" keeps separate center/context matrices and
returns the centers, "concat" trains an independent half-dimension model of
each order and concatenates.
"""
from __future__ import annotations

import numpy as np

from .config import TrainConfig
from .embedding import EmbeddingMatrix
from .graph import Graph
from .motifs import WeightedAdjacency, unit_adjacency
from .sgns import LR_FLOOR_FACTOR, _scatter_add, sigmoid

__all__ = ["edge_sampling_tables", "train_line"]


def edge_sampling_tables(g: Graph, weights: WeightedAdjacency):
    """(edge cumulative probabilities, negative-sampling distribution)."""
    w = weights.edge_weights.astype(np.float64)
    if w.sum() <= 0:
        raise ValueError("all edge weights are zero; nothing to sample")
    edge_cum = np.cumsum(w / w.sum())
    wdeg = np.zeros(g.node_count)
    np.add.at(wdeg, g.edges[:, 0], w)
    np.add.at(wdeg, g.edges[:, 1], w)
    noise = wdeg**0.75
    noise /= noise.sum()
    return edge_cum, noise


def _train_one_order(
    g: Graph,
    weights: WeightedAdjacency,
    dim: int,
    order: str,
    config: TrainConfig,
    rng: np.random.Generator,
) -> np.ndarray:
    edge_cum, noise = edge_sampling_tables(g, weights)
    n = g.node_count
    w_center = (rng.random((n, dim)) - 0.5) / dim
    # first order: one shared matrix plays both roles
    w_ctx = w_center if order == "first" else np.zeros((n, dim))

    k = config.negatives
    lr0 = config.learning_rate
    total = config.epochs * config.line_samples_factor * g.edge_count
    processed = 0
    while processed < total:
        b = min(config.batch_size, total - processed)
        lr = max(lr0 * (1.0 - processed / total), lr0 * LR_FLOOR_FACTOR)
        picks = np.searchsorted(edge_cum, rng.random(b), side="right")
        picks = np.minimum(picks, edge_cum.size - 1)
        src = g.edges[picks, 0].astype(np.int64)
        dst = g.edges[picks, 1].astype(np.int64)
        flip = rng.random(b) < 0.5
        src, dst = np.where(flip, dst, src), np.where(flip, src, dst)
        ctx_idx = np.empty((b, 1 + k), dtype=np.int64)
        ctx_idx[:, 0] = dst
        ctx_idx[:, 1:] = rng.choice(n, size=(b, k), p=noise)
        c_vec = w_center[src]
        ctx_vec = w_ctx[ctx_idx]
        scores = np.einsum("bd,bkd->bk", c_vec, ctx_vec)
        g_score = -sigmoid(scores)
        g_score[:, 0] += 1.0
        g_center = np.einsum("bk,bkd->bd", g_score, ctx_vec)
        g_ctx = (lr * g_score)[:, :, None].reshape(-1, 1) * np.repeat(c_vec, 1 + k, axis=0)
        _scatter_add(w_center, src, lr * g_center)
        _scatter_add(w_ctx, ctx_idx.reshape(-1), g_ctx)
        processed += b
    return w_center


def train_line(
    g: Graph,
    weights: WeightedAdjacency | None,
    config: TrainConfig,
    seed: int | None = None,
) -> EmbeddingMatrix:
    if weights is None:
        weights = unit_adjacency(g)
    base_seed = config.seed if seed is None else seed
    order = config.line_order
    if order in ("first", "second"):
        rng = np.random.default_rng(base_seed)
        vectors = _train_one_order(g, weights, config.dim, order, config, rng)
    else:
        if config.dim % 2:
            raise ValueError("concat order needs an even dimension")
        half = config.dim // 2
        seeds = np.random.SeedSequence(base_seed).spawn(2)
        first = _train_one_order(
            g, weights, half, "first", config, np.random.default_rng(seeds[0])
        )
        second = _train_one_order(
            g, weights, half, "second", config, np.random.default_rng(seeds[1])
        )
        vectors = np.hstack([first, second])
    return EmbeddingMatrix(vectors, {"trainer": "line", **config.to_dict()})
