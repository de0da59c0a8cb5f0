"""Command-line interface.

Subcommands: stats, motifs, embed, linkpred, cluster. Shared flags: --input,
--config, --seed, --out, --format {json,csv}. A config file holds flat
key=value lines mirroring RunConfig one-to-one; explicit command-line flags
override file values, which override defaults. Exit code 0 on success, 2 on
bad input (unparseable graph, unknown names, missing files).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import TrainConfig
from .graph import ParseError, graph_stats, load_edge_list, null_model_rewire
from .motifs import count_triangles
from .pipeline import (
    ALGORITHMS,
    MODES,
    VARIANTS,
    embed_graph,
    run_report,
    write_report_csv,
    write_report_json,
)
from .embedding import save_embedding_binary, save_embedding_text
from .synth import planted_partition

__all__ = ["RunConfig", "main"]


@dataclass
class RunConfig:
    """Everything a run needs, flat and file-serializable.

    List-valued settings (algorithm, variant, seeds) are comma strings so the
    key=value file format stays trivial; accessor methods parse them.
    """

    input: str = ""
    synthetic: str = ""  # "" or "ppm"
    dataset_name: str = ""
    algorithm: str = "all"
    variant: str = "all"
    mode: str = "strict"
    dim: int = 64
    walks_per_node: int = 10
    walk_length: int = 40
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    learning_rate: float = 0.025
    p: float = 1.0
    q: float = 1.0
    line_order: str = "concat"
    line_samples_factor: int = 100
    batch_size: int = 2048
    seed: int = 0
    seeds: str = ""  # comma list; empty means [seed]
    fraction: float = 0.1
    threshold: str = "median"  # "median" or a float literal
    clusters: int = 2
    null_model: int = 0
    swaps_per_edge: int = 10
    emb_format: str = "text"  # text | binary
    out: str = ""  # empty means stdout
    format: str = "json"  # json | csv

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        run = cls()
        text = Path(path).read_text()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            run.set_field(key.strip(), value.strip(), where=f"{path}:{lineno}")
        return run

    def to_file(self, path) -> None:
        lines = [f"{f.name}={getattr(self, f.name)}" for f in dataclasses.fields(self)]
        Path(path).write_text("\n".join(lines) + "\n")

    def set_field(self, key: str, value, where: str = "") -> None:
        by_name = {f.name: f for f in dataclasses.fields(self)}
        if key not in by_name:
            raise ValueError(f"{where}: unknown config key {key!r}")
        typ = by_name[key].type
        try:
            if typ == "int":
                value = int(value)
            elif typ == "float":
                value = float(value)
            else:
                value = str(value)
        except (TypeError, ValueError):
            raise ValueError(f"{where}: bad value for {key}: {value!r}") from None
        setattr(self, key, value)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            dim=self.dim,
            walks_per_node=self.walks_per_node,
            walk_length=self.walk_length,
            window=self.window,
            negatives=self.negatives,
            epochs=self.epochs,
            learning_rate=self.learning_rate,
            p=self.p,
            q=self.q,
            line_order=self.line_order,  # type: ignore[arg-type]
            line_samples_factor=self.line_samples_factor,
            batch_size=self.batch_size,
            seed=self.seed,
        )

    def seed_list(self) -> list[int]:
        if not self.seeds:
            return [self.seed]
        return [int(tok) for tok in self.seeds.split(",") if tok.strip() != ""]

    def algorithm_list(self) -> tuple[str, ...]:
        if self.algorithm == "all":
            return ALGORITHMS
        chosen = tuple(tok.strip() for tok in self.algorithm.split(","))
        bad = [a for a in chosen if a not in ALGORITHMS]
        if bad:
            raise ValueError(f"unknown algorithm(s): {', '.join(bad)}")
        return chosen

    def variant_list(self) -> tuple[str, ...]:
        if self.variant == "all":
            return VARIANTS
        chosen = tuple(tok.strip() for tok in self.variant.split(","))
        bad = [v for v in chosen if v not in VARIANTS]
        if bad:
            raise ValueError(f"unknown variant(s): {', '.join(bad)}")
        return chosen

    def threshold_value(self) -> float | None:
        if self.threshold == "median":
            return None
        return float(self.threshold)


def _load_graph(run: RunConfig):
    """(graph, dataset name) from --input or the synthetic generator."""
    if run.synthetic:
        if run.synthetic != "ppm":
            raise ValueError(f"unknown synthetic generator {run.synthetic!r}")
        g, _ = planted_partition(seed=run.seed)
        return g, run.dataset_name or "ppm"
    if not run.input:
        raise ValueError("no graph given: pass --input FILE or --synthetic ppm")
    g = load_edge_list(run.input)
    return g, run.dataset_name or Path(run.input).stem


def _emit(text: str, run: RunConfig) -> None:
    if run.out:
        Path(run.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dict_csv(d: dict) -> str:
    head = ",".join(d.keys())
    row = ",".join(repr(v) if isinstance(v, float) else str(v) for v in d.values())
    return f"{head}\n{row}\n"


def cmd_stats(run: RunConfig) -> int:
    g, _ = _load_graph(run)
    stats = graph_stats(g).to_dict()
    if run.format == "csv":
        _emit(_dict_csv(stats), run)
    else:
        _emit(json.dumps(stats, indent=2, sort_keys=True) + "\n", run)
    return 0


def cmd_motifs(run: RunConfig) -> int:
    g, _ = _load_graph(run)
    stats = count_triangles(g)
    if run.format == "csv":
        lines = ["u,v,edge_motif_degree"]
        lines += [f"{u},{v},{stats.edge_degree[(u, v)]}" for u, v in map(tuple, g.edges)]
        _emit("\n".join(lines) + "\n", run)
        return 0
    payload: dict = {
        "total_motifs": stats.total_motifs,
        "node_degree": stats.node_degree.tolist(),
        "edge_degree": [[int(u), int(v), int(stats.edge_degree[(u, v)])]
                        for u, v in map(tuple, g.edges)],
    }
    if run.null_model > 0:
        totals = []
        for i in range(run.null_model):
            rewired = null_model_rewire(g, run.swaps_per_edge, seed=run.seed + i)
            totals.append(count_triangles(rewired).total_motifs)
        arr = np.asarray(totals, dtype=np.float64)
        payload["null_model"] = {
            "samples": run.null_model,
            "swaps_per_edge": run.swaps_per_edge,
            "mean": float(arr.mean()),
            "std": float(arr.std()),
            "real_total": stats.total_motifs,
        }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", run)
    return 0


def cmd_embed(run: RunConfig) -> int:
    g, _ = _load_graph(run)
    algorithms = run.algorithm_list()
    if len(algorithms) != 1:
        raise ValueError("embed needs exactly one --algorithm")
    variants = run.variant_list()
    if len(variants) != 1:
        raise ValueError("embed needs exactly one --variant (base or mo)")
    if not run.out:
        raise ValueError("embed needs --out FILE")
    emb = embed_graph(g, algorithms[0], variants[0], run.train_config(), run.mode, run.seed)
    if run.emb_format == "binary":
        save_embedding_binary(emb, run.out)
    else:
        save_embedding_text(emb, run.out, labels=g.labels)
    return 0


def _report_command(run: RunConfig, task: str) -> int:
    g, dataset = _load_graph(run)
    kwargs = (
        {"fraction": run.fraction, "threshold": run.threshold_value(), "mode": run.mode}
        if task == "linkpred"
        else {"clusters": run.clusters, "mode": run.mode}
    )
    rows = run_report(
        g,
        dataset,
        task,
        algorithms=run.algorithm_list(),
        variants=run.variant_list(),
        seeds=run.seed_list(),
        config=run.train_config(),
        **kwargs,
    )
    if run.format == "csv":
        _emit(write_report_csv(rows), run)
    else:
        _emit(write_report_json(rows, run.to_dict()), run)
    return 0


def cmd_linkpred(run: RunConfig) -> int:
    return _report_command(run, "linkpred")


def cmd_cluster(run: RunConfig) -> int:
    return _report_command(run, "cluster")


_COMMANDS = {
    "stats": cmd_stats,
    "motifs": cmd_motifs,
    "embed": cmd_embed,
    "linkpred": cmd_linkpred,
    "cluster": cmd_cluster,
}

# argparse dest -> RunConfig field (dest already has dashes translated)
_FLAGS: list[tuple[str, dict]] = [
    ("--input", {}),
    ("--config", {"dest": "config_file"}),
    ("--seed", {"type": int}),
    ("--out", {}),
    ("--format", {"choices": ["json", "csv"]}),
]


def _add_common(p: argparse.ArgumentParser) -> None:
    for flag, kw in _FLAGS:
        p.add_argument(flag, **kw)


def _add_train_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algorithm")
    p.add_argument("--variant")
    p.add_argument("--mode", choices=list(MODES))
    p.add_argument("--dim", type=int)
    p.add_argument("--walks-per-node", type=int)
    p.add_argument("--walk-length", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--negatives", type=int)
    p.add_argument("--epochs", type=int)
    p.add_argument("--learning-rate", type=float)
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--line-order", choices=["first", "second", "concat"])
    p.add_argument("--line-samples-factor", type=int)
    p.add_argument("--batch-size", type=int)
    p.add_argument("--synthetic", choices=["ppm"])
    p.add_argument("--dataset-name")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motifemb",
        description="Triangle-aware graph embeddings and their evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="graph summary statistics")
    _add_common(p)
    p.add_argument("--synthetic", choices=["ppm"])

    p = sub.add_parser("motifs", help="triangle participation counts")
    _add_common(p)
    p.add_argument("--synthetic", choices=["ppm"])
    p.add_argument("--null-model", type=int)
    p.add_argument("--swaps-per-edge", type=int)

    p = sub.add_parser("embed", help="train one embedding and write it out")
    _add_common(p)
    _add_train_flags(p)
    p.add_argument("--emb-format", choices=["text", "binary"])

    p = sub.add_parser("linkpred", help="edge-holdout link prediction report")
    _add_common(p)
    _add_train_flags(p)
    p.add_argument("--seeds")
    p.add_argument("--fraction", type=float)
    p.add_argument("--threshold")

    p = sub.add_parser("cluster", help="k-means + silhouette report")
    _add_common(p)
    _add_train_flags(p)
    p.add_argument("--seeds")
    p.add_argument("--clusters", type=int)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "config_file", None):
            run = RunConfig.from_file(args.config_file)
        else:
            run = RunConfig()
        skip = {"command", "config_file"}
        for key, value in vars(args).items():
            if key in skip or value is None:
                continue
            run.set_field(key, value, where=f"--{key.replace('_', '-')}")
        return _COMMANDS[args.command](run)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
