"""End-to-end runs: embed a graph, evaluate, and emit tabular reports.

Report rows share one fixed column schema so downstream plotting never has
to branch: dataset, algorithm, variant, seed, auc, accuracy, precision,
recall, specificity, f1, sc. Cells that do not apply stay empty. Multi-seed
runs get one summary row per (dataset, algorithm, variant) group whose
numeric cells hold "mean±std" (population std) strings and whose seed cell
says "summary".
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .config import TrainConfig
from .embedding import EmbeddingMatrix
from .evaluation import (
    compute_metrics,
    cosine_scores,
    kmeans_cluster,
    make_split,
    silhouette_score,
)
from .graph import Graph
from .line import train_line
from .motifs import build_motif_adjacency, build_transition_model, count_triangles
from .sgns import train_sgns
from .spectral import train_spectral
from .walks import generate_walks, node2vec_walks

__all__ = [
    "ALGORITHMS",
    "VARIANTS",
    "MODES",
    "REPORT_COLUMNS",
    "embed_graph",
    "linkpred_row",
    "cluster_row",
    "run_report",
    "summarize_rows",
    "write_report_csv",
    "write_report_json",
]

ALGORITHMS = ("deepwalk", "node2vec", "line", "spectral")
VARIANTS = ("base", "mo")
MODES = ("strict", "smoothed")

REPORT_COLUMNS = (
    "dataset",
    "algorithm",
    "variant",
    "seed",
    "auc",
    "accuracy",
    "precision",
    "recall",
    "specificity",
    "f1",
    "sc",
)
LINKPRED_METRICS = ("auc", "accuracy", "precision", "recall", "specificity", "f1")


def embed_graph(
    g: Graph,
    algorithm: str,
    variant: str = "base",
    config: TrainConfig = TrainConfig(),
    mode: str = "strict",
    seed: int | None = None,
) -> EmbeddingMatrix:
    """Dispatch to one of the four back-ends, motif-enhanced or not.

    The "mo" variant biases walk transitions (deepwalk/node2vec) or edge
    weights (line/spectral) by triangle participation; "base" leaves the
    graph unweighted.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    if mode not in MODES:
        raise ValueError(f"unknown motif mode {mode!r}, expected one of {MODES}")
    seed = config.seed if seed is None else seed
    stats = count_triangles(g) if variant == "mo" else None

    enhanced = stats is not None
    if algorithm in ("deepwalk", "node2vec"):
        transitions = build_transition_model(g, stats, mode) if enhanced else None
        if algorithm == "deepwalk":
            corpus = generate_walks(g, transitions, config, seed)
        else:
            corpus = node2vec_walks(g, transitions, config.p, config.q, config, seed)
        emb = train_sgns(corpus, config, seed, g.node_count)
    else:
        weights = build_motif_adjacency(g, stats) if enhanced else None
        if algorithm == "line":
            emb = train_line(g, weights, config, seed)
        else:
            emb = train_spectral(g, weights, config.dim, seed)

    provenance = {
        "algorithm": algorithm,
        "variant": variant,
        "motif_mode": mode if variant == "mo" else "none",
        **config.to_dict(),
        "seed": seed,
    }
    return EmbeddingMatrix(emb.vectors, provenance)


def _blank_row(dataset: str, algorithm: str, variant: str, seed) -> dict:
    row = {col: "" for col in REPORT_COLUMNS}
    row.update(dataset=dataset, algorithm=algorithm, variant=variant, seed=seed)
    return row


def linkpred_row(
    g: Graph,
    dataset: str,
    algorithm: str,
    variant: str,
    config: TrainConfig,
    seed: int,
    fraction: float = 0.1,
    threshold: float | None = None,
    mode: str = "strict",
) -> dict:
    """Holdout split, embed the TRAIN graph, score held-out vs non-edges."""
    split = make_split(g, fraction, seed)
    emb = embed_graph(split.train_graph, algorithm, variant, config.with_seed(seed), mode, seed)
    pos, z_pos = cosine_scores(emb, split.test_edges)
    neg, z_neg = cosine_scores(emb, split.test_non_edges)
    report = compute_metrics(pos, neg, threshold, z_pos + z_neg)
    row = _blank_row(dataset, algorithm, variant, seed)
    row.update({k: getattr(report, k) for k in LINKPRED_METRICS})
    return row


def cluster_row(
    g: Graph,
    dataset: str,
    algorithm: str,
    variant: str,
    config: TrainConfig,
    seed: int,
    clusters: int = 2,
    mode: str = "strict",
) -> dict:
    emb = embed_graph(g, algorithm, variant, config.with_seed(seed), mode, seed)
    labels = kmeans_cluster(emb.vectors, clusters, seed)
    row = _blank_row(dataset, algorithm, variant, seed)
    row["sc"] = silhouette_score(emb.vectors, labels).score
    return row


def run_report(
    g: Graph,
    dataset: str,
    task: str,
    algorithms=ALGORITHMS,
    variants=VARIANTS,
    seeds=(0,),
    config: TrainConfig = TrainConfig(),
    **task_kwargs,
) -> list[dict]:
    """All (algorithm, variant, seed) rows for one task, sorted, plus one
    summary row per (algorithm, variant) when there are multiple seeds."""
    if task not in ("linkpred", "cluster"):
        raise ValueError(f"unknown task {task!r}")
    fn = linkpred_row if task == "linkpred" else cluster_row
    rows = []
    for algorithm in algorithms:
        for variant in variants:
            for seed in seeds:
                rows.append(
                    fn(g, dataset, algorithm, variant, config, int(seed), **task_kwargs)
                )
    rows.sort(key=lambda r: (r["dataset"], r["algorithm"], r["variant"], r["seed"]))
    if len(seeds) > 1:
        rows.extend(summarize_rows(rows))
    return rows


def summarize_rows(rows: list[dict]) -> list[dict]:
    """One "mean±std" row per (dataset, algorithm, variant) group."""
    groups: dict[tuple, list[dict]] = {}
    for row in rows:
        if row["seed"] == "summary":
            continue
        groups.setdefault((row["dataset"], row["algorithm"], row["variant"]), []).append(row)
    out = []
    for (dataset, algorithm, variant), members in sorted(groups.items()):
        summary = _blank_row(dataset, algorithm, variant, "summary")
        for col in LINKPRED_METRICS + ("sc",):
            values = [r[col] for r in members if r[col] != ""]
            if values:
                arr = np.asarray(values, dtype=np.float64)
                summary[col] = f"{arr.mean():.6f}±{arr.std():.6f}"
        out.append(summary)
    return out


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_report_csv(rows: list[dict], path=None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow([_format_cell(row[c]) for c in REPORT_COLUMNS])
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text


def write_report_json(rows: list[dict], run_config: dict, path=None) -> str:
    """Rows plus the full run configuration, so any report regenerates
    bit-identically from its own metadata."""
    payload = {"config": run_config, "rows": rows}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
