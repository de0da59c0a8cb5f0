"""Skip-gram with negative sampling over walk corpora.

Center vectors start at uniform(-0.5, 0.5)/dim, context vectors at zero.
Updates run in fixed-order minibatches with exact gradient accumulation
(duplicate rows within a batch are summed), so results are deterministic
for a given corpus, config, and seed. The learning rate decays linearly
over the total pair budget with a floor of 1e-4 times the initial rate.

Because contexts start at zero, center vectors receive no gradient until
the second minibatch; keep batch_size well below the pair count (or epochs
above 1) or the run degenerates to the random init.
"""
from __future__ import annotations

import numpy as np

from .config import TrainConfig
from .embedding import EmbeddingMatrix
from .walks import WalkCorpus

__all__ = [
    "log_sigmoid",
    "sigmoid",
    "pair_objective",
    "pair_gradients",
    "extract_pairs",
    "noise_distribution",
    "train_sgns",
]

LR_FLOOR_FACTOR = 1e-4


def sigmoid(x):
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def log_sigmoid(x):
    # log(1 + exp(-x)) without overflow on either tail
    x = np.asarray(x, dtype=np.float64)
    return np.where(x >= 0, -np.log1p(np.exp(-np.abs(x))), x - np.log1p(np.exp(-np.abs(x))))


def pair_objective(center: np.ndarray, pos_ctx: np.ndarray, neg_ctx: np.ndarray) -> float:
    """log sigma(c.p) + sum_i log sigma(-c.n_i) for one training pair."""
    pos_term = float(log_sigmoid(center @ pos_ctx))
    neg_term = float(np.sum(log_sigmoid(-(neg_ctx @ center))))
    return pos_term + neg_term


def pair_gradients(center: np.ndarray, pos_ctx: np.ndarray, neg_ctx: np.ndarray):
    """Gradients of pair_objective w.r.t. (center, pos_ctx, each neg row)."""
    g_pos_score = 1.0 - sigmoid(center @ pos_ctx)
    g_neg_score = -sigmoid(neg_ctx @ center)
    g_center = g_pos_score * pos_ctx + g_neg_score @ neg_ctx
    g_pos = g_pos_score * center
    g_negs = g_neg_score[:, None] * center[None, :]
    return g_center, g_pos, g_negs


def extract_pairs(corpus: WalkCorpus, window: int) -> tuple[np.ndarray, np.ndarray]:
    """(center, context) id arrays for every ordered pair within the window."""
    centers: list[np.ndarray] = []
    contexts: list[np.ndarray] = []
    for walk in corpus.walks:
        for off in range(1, window + 1):
            if walk.size <= off:
                break
            left, right = walk[:-off], walk[off:]
            centers.append(left)
            contexts.append(right)
            centers.append(right)
            contexts.append(left)
    if not centers:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(centers), np.concatenate(contexts)


def noise_distribution(corpus: WalkCorpus, node_count: int, power: float = 0.75) -> np.ndarray:
    """Unigram^power negative-sampling distribution over corpus tokens."""
    counts = np.zeros(node_count, dtype=np.float64)
    for walk in corpus.walks:
        np.add.at(counts, walk, 1.0)
    weights = counts**power
    total = weights.sum()
    if total <= 0:
        raise ValueError("empty corpus: no tokens to build a noise distribution from")
    return weights / total


def _scatter_add(matrix: np.ndarray, idx: np.ndarray, grads: np.ndarray) -> None:
    """matrix[idx] += grads with duplicate idx rows summed; deterministic."""
    order = np.argsort(idx, kind="stable")
    idx_sorted = idx[order]
    grads_sorted = grads[order]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(idx_sorted)) + 1))
    matrix[idx_sorted[starts]] += np.add.reduceat(grads_sorted, starts, axis=0)


def train_sgns(
    corpus: WalkCorpus,
    config: TrainConfig,
    seed: int | None = None,
    node_count: int | None = None,
    return_context: bool = False,
) -> EmbeddingMatrix | tuple[EmbeddingMatrix, np.ndarray]:
    """Trains and returns the center-vector matrix (node_count x dim).

    return_context=True additionally returns the raw context matrix, which
    the objective actually scores against; useful for probing convergence.
    """
    if node_count is None:
        node_count = 1 + max(int(w.max()) for w in corpus.walks if w.size)
    rng = np.random.default_rng(config.seed if seed is None else seed)
    d = config.dim
    w_center = (rng.random((node_count, d)) - 0.5) / d
    w_ctx = np.zeros((node_count, d))

    centers, contexts = extract_pairs(corpus, config.window)
    if centers.size == 0:
        raise ValueError("corpus yields no training pairs; walks too short?")
    noise = noise_distribution(corpus, node_count)
    k = config.negatives
    lr0 = config.learning_rate
    total_budget = centers.size * config.epochs
    processed = 0
    for _ in range(config.epochs):
        perm = rng.permutation(centers.size)
        for lo in range(0, perm.size, config.batch_size):
            batch = perm[lo : lo + config.batch_size]
            b = batch.size
            lr = max(lr0 * (1.0 - processed / total_budget), lr0 * LR_FLOOR_FACTOR)
            c_idx = centers[batch]
            ctx_idx = np.empty((b, 1 + k), dtype=np.int64)
            ctx_idx[:, 0] = contexts[batch]
            ctx_idx[:, 1:] = rng.choice(node_count, size=(b, k), p=noise)
            c_vec = w_center[c_idx]
            ctx_vec = w_ctx[ctx_idx]
            scores = np.einsum("bd,bkd->bk", c_vec, ctx_vec)
            g_score = -sigmoid(scores)
            g_score[:, 0] += 1.0  # positive column label
            _scatter_add(w_center, c_idx, lr * np.einsum("bk,bkd->bd", g_score, ctx_vec))
            _scatter_add(
                w_ctx,
                ctx_idx.reshape(-1),
                (lr * g_score)[:, :, None].reshape(-1, 1) * np.repeat(c_vec, 1 + k, axis=0),
            )
            processed += b
    emb = EmbeddingMatrix(w_center, {"trainer": "sgns", **config.to_dict()})
    return (emb, w_ctx) if return_context else emb
