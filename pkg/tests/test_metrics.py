"""Path statistics, clustering, summaries, and the small-world check."""

from __future__ import annotations

import math
import random

import pytest

from influnet import (
    DirectedGraph,
    NetworkSummary,
    average_clustering,
    average_path_length,
    diameter,
    local_clustering,
    parse_edge_csv,
    small_world_sigma,
    summarize,
    summary_csv,
    to_edge_csv,
)
from helpers import fw_distances, fw_path_stats, oracle_clustering, random_digraph


def test_path_stats_on_three_chain():
    g = DirectedGraph([(1, 2), (2, 3)])
    # Finite pairs: 1-2, 1-3, 2-3 with lengths 1, 2, 1.
    assert average_path_length(g) == 4 / 3
    assert diameter(g) == 2


def test_path_stats_on_directed_cycle():
    g = DirectedGraph([(1, 2), (2, 3), (3, 4), (4, 1)])
    assert average_path_length(g) == 2.0
    assert diameter(g) == 3


def test_two_node_summary():
    s = summarize(DirectedGraph([(1, 2)]))
    assert s == NetworkSummary(2, 1, 1.0, 0.0, 1, 1)


def test_path_stats_need_two_nodes():
    with pytest.raises(ValueError):
        average_path_length(DirectedGraph([], nodes=[1]))


def test_no_reachable_pairs_rejected():
    with pytest.raises(ValueError, match="no reachable pairs"):
        average_path_length(DirectedGraph([], nodes=[1, 2]))


def test_summarize_empty_rejected():
    with pytest.raises(ValueError):
        summarize(DirectedGraph())


def test_clustering_mutual_triangle():
    edges = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)]
    assert average_clustering(DirectedGraph(edges)) == 1.0


def test_clustering_ignores_direction():
    # One-way triangle still projects to a closed triple.
    g = DirectedGraph([(1, 2), (2, 3), (3, 1)])
    assert local_clustering(g) == {1: 1.0, 2: 1.0, 3: 1.0}


def test_clustering_star_is_zero():
    g = DirectedGraph([(1, 0), (2, 0), (3, 0)])
    assert average_clustering(g) == 0.0


def test_clustering_triangle_with_pendant():
    g = DirectedGraph([(1, 2), (2, 3), (3, 1), (4, 1)])
    coeffs = local_clustering(g)
    assert coeffs[1] == 1 / 3
    assert coeffs[2] == 1.0
    assert coeffs[3] == 1.0
    assert coeffs[4] == 0.0
    assert average_clustering(g) == pytest.approx(7 / 12, abs=1e-15)


def test_clustering_matches_pair_counting_oracle():
    rng = random.Random(23)
    for _ in range(25):
        g = random_digraph(rng, rng.randint(3, 12), 0.35)
        mine = local_clustering(g)
        ref = oracle_clustering(g)
        for v in g.nodes:
            assert mine[v] == ref[v]


def test_path_stats_match_floyd_warshall():
    rng = random.Random(29)
    for _ in range(25):
        g = random_digraph(rng, rng.randint(2, 10), 0.3)
        try:
            apl, diam = fw_path_stats(g)
        except ValueError:
            with pytest.raises(ValueError):
                average_path_length(g)
            continue
        assert average_path_length(g) == apl
        assert diameter(g) == diam


def test_adding_edges_never_lengthens_paths():
    rng = random.Random(31)
    g = random_digraph(rng, 9, 0.25)
    before = fw_distances(g)
    absent = [
        (i, j)
        for i in g.nodes
        for j in g.nodes
        if i != j and not g.has_edge(i, j)
    ]
    extra = rng.choice(absent)
    bigger = DirectedGraph(list(g.arc_set()) + [extra], nodes=g.nodes)
    after = fw_distances(bigger)
    for pair, d in before.items():
        assert after[pair] <= d


def test_summary_survives_round_trip():
    rng = random.Random(37)
    g = random_digraph(rng, 15, 0.2)
    assert summarize(parse_edge_csv(to_edge_csv(g))) == summarize(g)


def test_threads_do_not_change_results():
    rng = random.Random(41)
    g = random_digraph(rng, 20, 0.15)
    assert summarize(g, threads=1) == summarize(g, threads=4)


def test_sigma_is_ratio_of_ratios():
    actual = NetworkSummary(100, 400, 4.0, 0.3, 9, 1)
    base = NetworkSummary(100, 400, 2.0, 0.05, 5, 1)
    v = small_world_sigma(actual, base)
    assert v.clustering_ratio == 0.3 / 0.05
    assert v.path_length_ratio == 4.0 / 2.0
    assert v.sigma == v.clustering_ratio / v.path_length_ratio
    assert v.is_small_world


def test_sigma_against_itself_is_one():
    s = NetworkSummary(10, 20, 2.5, 0.2, 4, 1)
    v = small_world_sigma(s, s)
    assert v.sigma == 1.0
    assert not v.is_small_world


def test_sigma_rejects_degenerate_baseline():
    actual = NetworkSummary(10, 20, 2.5, 0.2, 4, 1)
    flat = NetworkSummary(10, 0, 1.0, 0.0, 1, 1)
    with pytest.raises(ValueError, match="baseline"):
        small_world_sigma(actual, flat)


def test_summary_csv_rendering():
    rows = [("full", NetworkSummary(3, 2, 4 / 3, 0.0, 2, 1))]
    text = summary_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "network,nodes,edges,avg_path_length,avg_clustering,diameter,components"
    assert lines[1] == "full,3,2,1.333333,0.000000,2,1"
    assert text.endswith("\n")


def test_clustering_average_uses_every_node():
    # Isolated nodes count as zeros in the mean, not dropped.
    g = DirectedGraph([(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)], nodes=[1, 2, 3, 9])
    assert math.isclose(average_clustering(g), 3 / 4)
