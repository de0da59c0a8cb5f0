"""Edge-sampling embeddings: sampling-table semantics (chi-square), the
noise distribution formula, order variants, and separation behavior on a
bridged-communities toy graph."""
from __future__ import annotations

import numpy as np
import pytest
import scipy.sparse as sp
from scipy import stats as sps

from motifemb import (
    TrainConfig,
    build_motif_adjacency,
    count_triangles,
    train_line,
    unit_adjacency,
)
from motifemb.line import edge_sampling_tables
from motifemb.motifs import WeightedAdjacency


def line_config(**kw) -> TrainConfig:
    base = dict(dim=8, negatives=4, epochs=3, line_order="first", batch_size=256)
    base.update(kw)
    return TrainConfig(**base)


class TestSamplingTables:
    def test_cumulative_shape(self, tri_pendant):
        am = build_motif_adjacency(tri_pendant, count_triangles(tri_pendant))
        edge_cum, noise = edge_sampling_tables(tri_pendant, am)
        assert edge_cum.size == tri_pendant.edge_count
        assert np.all(np.diff(edge_cum) >= 0)
        assert edge_cum[-1] == pytest.approx(1.0, abs=1e-12)
        assert noise.sum() == pytest.approx(1.0, abs=1e-12)

    def test_edge_draws_follow_weights(self, tri_pendant):
        # triangle edges carry 4/3, the pendant edge 1; draw frequencies
        # must match those proportions
        am = build_motif_adjacency(tri_pendant, count_triangles(tri_pendant))
        edge_cum, _ = edge_sampling_tables(tri_pendant, am)
        rng = np.random.default_rng(0)
        picks = np.searchsorted(edge_cum, rng.random(60_000), side="right")
        counts = np.bincount(np.minimum(picks, edge_cum.size - 1),
                             minlength=edge_cum.size)
        w = am.edge_weights
        expected = w / w.sum() * counts.sum()
        assert sps.chisquare(counts, expected).pvalue > 1e-3

    def test_noise_is_weighted_degree_power(self, tri_pendant):
        ua = unit_adjacency(tri_pendant)
        _, noise = edge_sampling_tables(tri_pendant, ua)
        deg = np.array([2.0, 2.0, 3.0, 1.0]) ** 0.75
        assert np.allclose(noise, deg / deg.sum(), atol=1e-15)

    def test_all_zero_weights_rejected(self, tri_pendant):
        dead = WeightedAdjacency(
            node_count=4,
            edge_weights=np.zeros(4),
            matrix=sp.csr_matrix((4, 4)),
        )
        with pytest.raises(ValueError):
            edge_sampling_tables(tri_pendant, dead)


class TestTrainLine:
    @pytest.mark.parametrize("order", ["first", "second", "concat"])
    def test_shapes_and_finiteness(self, two_triangles_bridged, order):
        cfg = line_config(line_order=order)
        emb = train_line(two_triangles_bridged, None, cfg, seed=0)
        assert emb.vectors.shape == (6, 8)
        assert np.all(np.isfinite(emb.vectors))
        assert emb.provenance["trainer"] == "line"

    def test_concat_needs_even_dim(self, two_triangles_bridged):
        with pytest.raises(ValueError):
            train_line(
                two_triangles_bridged, None, line_config(dim=7, line_order="concat"),
                seed=0,
            )

    def test_determinism(self, two_triangles_bridged):
        cfg = line_config(line_order="concat")
        a = train_line(two_triangles_bridged, None, cfg, seed=3)
        b = train_line(two_triangles_bridged, None, cfg, seed=3)
        c = train_line(two_triangles_bridged, None, cfg, seed=4)
        assert np.array_equal(a.vectors, b.vectors)
        assert not np.array_equal(a.vectors, c.vectors)

    def test_orders_differ(self, two_triangles_bridged):
        g = two_triangles_bridged
        first = train_line(g, None, line_config(line_order="first"), seed=0)
        second = train_line(g, None, line_config(line_order="second"), seed=0)
        assert not np.allclose(first.vectors, second.vectors)

    def test_weights_change_result(self, two_triangles_bridged):
        g = two_triangles_bridged
        am = build_motif_adjacency(g, count_triangles(g))
        cfg = line_config()
        plain = train_line(g, None, cfg, seed=1)
        weighted = train_line(g, am, cfg, seed=1)
        assert not np.allclose(plain.vectors, weighted.vectors)

    def test_triangle_mates_score_higher(self, two_triangles_bridged):
        g = two_triangles_bridged
        cfg = line_config(epochs=6, dim=8)
        emb = train_line(g, None, cfg, seed=2)
        v = emb.vectors / np.linalg.norm(emb.vectors, axis=1, keepdims=True)
        sims = v @ v.T
        intra = [sims[0, 1], sims[0, 2], sims[1, 2],
                 sims[3, 4], sims[3, 5], sims[4, 5]]
        inter = [sims[i, j] for i in (0, 1) for j in (4, 5)]
        assert np.mean(intra) > np.mean(inter)
