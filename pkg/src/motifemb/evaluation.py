"""Link-prediction and clustering evaluation.

Link prediction: hold out a fraction of edges (optionally refusing removals
that would disconnect the remaining graph), pair them 1:1 with uniformly
sampled non-edges, score candidate pairs by cosine similarity of endpoint
embeddings, and report ranking AUC plus thresholded confusion metrics.

Clustering: seeded k-means++ / Lloyd iterations and the mean silhouette
coefficient under Euclidean distance.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.stats import rankdata

from .embedding import EmbeddingMatrix
from .graph import Graph

__all__ = [
    "LinkPredSplit",
    "make_split",
    "cosine_scores",
    "rank_auc",
    "ConfusionCounts",
    "MetricsReport",
    "confusion_at_threshold",
    "metrics_from_counts",
    "compute_metrics",
    "kmeans_cluster",
    "SilhouetteReport",
    "silhouette_score",
]


@dataclass(frozen=True, eq=False)
class LinkPredSplit:
    """Train graph plus held-out positive pairs and sampled negative pairs."""

    train_graph: Graph
    test_edges: np.ndarray
    test_non_edges: np.ndarray
    fraction: float
    seed: int


def _connected_after_removal(adj: dict[int, set], u: int, v: int) -> bool:
    """BFS from u in the current (post-removal) adjacency, looking for v."""
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def make_split(
    g: Graph,
    fraction: float = 0.1,
    seed: int = 0,
    protect_connectivity: bool = True,
) -> LinkPredSplit:
    """Uniformly removes floor(fraction * |E|) edges as test positives.

    With protect_connectivity, an edge is skipped when its removal would
    separate its endpoints in the remaining graph, so components never
    split; fewer positives than requested may result on sparse graphs.
    Negatives are distinct non-edges of the ORIGINAL graph, matched 1:1.
    """
    if not 0 < fraction < 1:
        raise ValueError("fraction must be in (0, 1)")
    m = g.edge_count
    # epsilon guards floor against IEEE artifacts like 0.3 * 10 = 2.999...96
    target = int(np.floor(fraction * m + 1e-9))
    if target < 1:
        raise ValueError(f"fraction {fraction} selects no edges out of {m}")
    rng = np.random.default_rng(seed)
    adj: dict[int, set] = {v: set(map(int, g.neighbors(v))) for v in range(g.node_count)}
    removed: list[tuple[int, int]] = []
    for idx in rng.permutation(m):
        if len(removed) == target:
            break
        u, v = map(int, g.edges[idx])
        adj[u].discard(v)
        adj[v].discard(u)
        if protect_connectivity and not _connected_after_removal(adj, u, v):
            adj[u].add(v)
            adj[v].add(u)
            continue
        removed.append((u, v))
    if not removed:
        raise ValueError("connectivity constraint blocked every removal")
    kept = [(u, v) for u, v in g.edges if (min(u, v), max(u, v)) not in
            {(min(a, b), max(a, b)) for a, b in removed}]
    train = Graph.from_edges(g.node_count, kept, labels=g.labels)

    forbidden = g.edge_set()
    negatives: set[tuple[int, int]] = set()
    max_non_edges = g.node_count * (g.node_count - 1) // 2 - m
    if max_non_edges < len(removed):
        raise ValueError("graph too dense to sample matching non-edges")
    while len(negatives) < len(removed):
        draw = rng.integers(0, g.node_count, size=(2 * len(removed), 2))
        for a, b in draw:
            if len(negatives) == len(removed):
                break
            if a == b:
                continue
            pair = (int(min(a, b)), int(max(a, b)))
            if pair in forbidden or pair in negatives:
                continue
            negatives.add(pair)
    pos = np.asarray(removed, dtype=np.int64)
    neg = np.asarray(sorted(negatives), dtype=np.int64)
    return LinkPredSplit(train, pos, neg, fraction, seed)


def cosine_scores(emb: EmbeddingMatrix, pairs: np.ndarray) -> tuple[np.ndarray, int]:
    """Cosine similarity per (u, v) row; pairs touching a zero-norm vector
    score 0.0, and the count of such pairs is returned alongside."""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    u = emb.vectors[pairs[:, 0]]
    v = emb.vectors[pairs[:, 1]]
    nu = np.linalg.norm(u, axis=1)
    nv = np.linalg.norm(v, axis=1)
    ok = (nu > 0) & (nv > 0)
    scores = np.zeros(pairs.shape[0])
    scores[ok] = np.sum(u[ok] * v[ok], axis=1) / (nu[ok] * nv[ok])
    return scores, int(np.sum(~ok))


def rank_auc(pos_scores: np.ndarray, neg_scores: np.ndarray) -> float:
    """Mann-Whitney AUC with average ranks on ties (a tie counts 1/2)."""
    pos = np.asarray(pos_scores, dtype=np.float64)
    neg = np.asarray(neg_scores, dtype=np.float64)
    if pos.size == 0 or neg.size == 0:
        raise ValueError("need at least one positive and one negative score")
    ranks = rankdata(np.concatenate([pos, neg]))
    r_pos = ranks[: pos.size].sum()
    return float((r_pos - pos.size * (pos.size + 1) / 2) / (pos.size * neg.size))


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int


@dataclass(frozen=True)
class MetricsReport:
    auc: float
    accuracy: float
    precision: float
    recall: float
    specificity: float
    f1: float
    threshold: float
    counts: ConfusionCounts
    zero_norm_pairs: int = 0

    def to_dict(self) -> dict:
        return {
            "auc": self.auc,
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "specificity": self.specificity,
            "f1": self.f1,
        }


def _safe_ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def confusion_at_threshold(
    pos_scores: np.ndarray, neg_scores: np.ndarray, threshold: float
) -> ConfusionCounts:
    """Predict positive where score >= threshold."""
    tp = int(np.sum(pos_scores >= threshold))
    fp = int(np.sum(neg_scores >= threshold))
    return ConfusionCounts(tp=tp, fp=fp, tn=len(neg_scores) - fp, fn=len(pos_scores) - tp)


def metrics_from_counts(c: ConfusionCounts) -> dict:
    precision = _safe_ratio(c.tp, c.tp + c.fp)
    recall = _safe_ratio(c.tp, c.tp + c.fn)
    return {
        "accuracy": _safe_ratio(c.tp + c.tn, c.tp + c.fp + c.tn + c.fn),
        "precision": precision,
        "recall": recall,
        "specificity": _safe_ratio(c.tn, c.tn + c.fp),
        "f1": _safe_ratio(2 * precision * recall, precision + recall),
    }


def compute_metrics(
    pos_scores: np.ndarray,
    neg_scores: np.ndarray,
    threshold: float | None = None,
    zero_norm_pairs: int = 0,
) -> MetricsReport:
    """Full report; threshold None means the pooled median of all scores."""
    pos = np.asarray(pos_scores, dtype=np.float64)
    neg = np.asarray(neg_scores, dtype=np.float64)
    thr = float(np.median(np.concatenate([pos, neg]))) if threshold is None else threshold
    counts = confusion_at_threshold(pos, neg, thr)
    parts = metrics_from_counts(counts)
    return MetricsReport(
        auc=rank_auc(pos, neg),
        threshold=thr,
        counts=counts,
        zero_norm_pairs=zero_norm_pairs,
        **parts,
    )


def _kmeanspp_init(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    d2 = cdist(x, centers[:1], "sqeuclidean").ravel()
    for j in range(1, k):
        total = d2.sum()
        if total <= 0:
            centers[j] = x[rng.integers(n)]  # all remaining points coincide
        else:
            centers[j] = x[rng.choice(n, p=d2 / total)]
        d2 = np.minimum(d2, cdist(x, centers[j : j + 1], "sqeuclidean").ravel())
    return centers


def kmeans_cluster(
    x: np.ndarray,
    k: int,
    seed: int = 0,
    max_iter: int = 300,
    tol: float = 1e-6,
) -> np.ndarray:
    """Lloyd iterations from a k-means++ start; returns integer labels.

    An emptied cluster is re-seeded at the point farthest from its assigned
    center, keeping exactly k nonempty clusters.
    """
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    rng = np.random.default_rng(seed)
    centers = _kmeanspp_init(x, k, rng)
    labels = np.zeros(n, dtype=np.int64)
    for _ in range(max_iter):
        d2 = cdist(x, centers, "sqeuclidean")
        labels = d2.argmin(axis=1)
        new_centers = centers.copy()
        for j in range(k):
            members = labels == j
            if members.any():
                new_centers[j] = x[members].mean(axis=0)
            else:
                worst = int(np.argmax(d2[np.arange(n), labels]))
                new_centers[j] = x[worst]
                labels[worst] = j
        shift = float(np.linalg.norm(new_centers - centers, axis=1).max())
        centers = new_centers
        if shift < tol:
            break
    return labels


@dataclass(frozen=True, eq=False)
class SilhouetteReport:
    values: np.ndarray  # s(i) per point
    score: float  # mean over all points

    def to_dict(self) -> dict:
        return {"sc": self.score}


def silhouette_score(x: np.ndarray, labels: np.ndarray) -> SilhouetteReport:
    """s(i) = (b - a) / max(a, b) with Euclidean distances; a is the mean
    distance to the rest of i's cluster, b the smallest mean distance to
    any other cluster. Points in singleton clusters get s = 0."""
    x = np.asarray(x, dtype=np.float64)
    labels = np.asarray(labels)
    uniq = np.unique(labels)
    if uniq.size < 2:
        raise ValueError("silhouette needs at least two clusters")
    dist = cdist(x, x)
    members = {c: np.flatnonzero(labels == c) for c in uniq}
    values = np.zeros(x.shape[0])
    for i in range(x.shape[0]):
        own = members[labels[i]]
        if own.size == 1:
            continue
        a = dist[i, own].sum() / (own.size - 1)
        b = min(dist[i, members[c]].mean() for c in uniq if c != labels[i])
        denom = max(a, b)
        values[i] = (b - a) / denom if denom > 0 else 0.0
    return SilhouetteReport(values, float(values.mean()))
