"""Hyperparameter container shared by all embedding back-ends."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

__all__ = ["TrainConfig"]

LineOrder = Literal["first", "second", "concat"]


@dataclass(frozen=True)
class TrainConfig:
    """Embedding hyperparameters with conventional skip-gram defaults.

    Every trainer is deterministic given (graph, config, seed); defaults are
    recorded into each embedding's provenance so results stay reproducible.
    """

    dim: int = 64
    walks_per_node: int = 10
    walk_length: int = 40
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    learning_rate: float = 0.025
    p: float = 1.0
    q: float = 1.0
    line_order: LineOrder = "concat"
    line_samples_factor: int = 100  # edge samples per edge per epoch
    batch_size: int = 2048
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("dim", "walks_per_node", "walk_length", "window",
                     "negatives", "epochs", "batch_size", "line_samples_factor"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.p <= 0 or self.q <= 0:
            raise ValueError("p and q must be > 0")
        if self.line_order not in ("first", "second", "concat"):
            raise ValueError(f"unknown line_order: {self.line_order!r}")

    def with_seed(self, seed: int) -> "TrainConfig":
        return replace(self, seed=seed)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "walks_per_node": self.walks_per_node,
            "walk_length": self.walk_length,
            "window": self.window,
            "negatives": self.negatives,
            "epochs": self.epochs,
            "learning_rate": self.learning_rate,
            "p": self.p,
            "q": self.q,
            "line_order": self.line_order,
            "line_samples_factor": self.line_samples_factor,
            "batch_size": self.batch_size,
            "seed": self.seed,
        }
