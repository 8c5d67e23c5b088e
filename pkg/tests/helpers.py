"""Shared oracles and corpus builders for the test suite.

The oracles take the slow obvious route on purpose: distances by
Floyd-Warshall, betweenness by enumerating every shortest path with exact
rationals, cascades by rescanning the whole node set each day.  Fast
implementations are judged against these on seeded corpora.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from influnet import DirectedGraph, parse_edge_csv

DATA_DIR = Path(__file__).parent / "data"
FIXTURE = DATA_DIR / "follows12.csv"
GOLDEN_DIR = DATA_DIR / "golden"


def load_fixture() -> DirectedGraph:
    return parse_edge_csv(FIXTURE.read_text(encoding="utf-8"))


def random_digraph(rng: random.Random, n: int, p: float) -> DirectedGraph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    ]
    return DirectedGraph(edges, nodes=range(n))


def random_strongly_connected(rng: random.Random, n: int, extra: int) -> DirectedGraph:
    """Hamiltonian cycle over a random order, one aperiodicity chord, extras.

    The chord closes a cycle of length n - 1, so cycle lengths n and n - 1
    coexist and the graph is aperiodic; power iteration cannot oscillate.
    """
    order = list(range(n))
    rng.shuffle(order)
    edges = {(order[i], order[(i + 1) % n]) for i in range(n)}
    if n >= 3:
        edges.add((order[0], order[2]))
    for _ in range(extra):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            edges.add((i, j))
    return DirectedGraph(edges, nodes=range(n))


def fw_distances(g: DirectedGraph) -> dict[tuple[int, int], int]:
    """All-pairs distances by Floyd-Warshall; unreachable pairs absent."""
    ids = sorted(g.nodes)
    inf = float("inf")
    dist = {(i, j): (0 if i == j else inf) for i in ids for j in ids}
    for i, j in g.arc_set():
        dist[(i, j)] = 1
    for k in ids:
        for i in ids:
            dik = dist[(i, k)]
            if dik == inf:
                continue
            for j in ids:
                alt = dik + dist[(k, j)]
                if alt < dist[(i, j)]:
                    dist[(i, j)] = alt
    return {
        (i, j): int(d)
        for (i, j), d in dist.items()
        if i != j and d != inf
    }


def fw_path_stats(g: DirectedGraph) -> tuple[float, int]:
    """Average finite path length and diameter from the Floyd-Warshall table."""
    dists = fw_distances(g)
    if not dists:
        raise ValueError("no reachable pairs")
    total = sum(dists.values())
    return total / len(dists), max(dists.values())


def oracle_clustering(g: DirectedGraph) -> dict[int, float]:
    """Per-node coefficients by explicitly testing every neighbor pair."""
    nbrs = {
        n: frozenset(g.out_neighbors(n)) | frozenset(g.in_neighbors(n))
        for n in g.nodes
    }
    out: dict[int, float] = {}
    for n in g.nodes:
        hood = sorted(nbrs[n])
        k = len(hood)
        if k < 2:
            out[n] = 0.0
            continue
        tri = 0
        for a in range(k):
            for b in range(a + 1, k):
                if hood[b] in nbrs[hood[a]]:
                    tri += 1
        out[n] = 2 * tri / (k * (k - 1))
    return out


def oracle_betweenness(g: DirectedGraph) -> dict[int, Fraction]:
    """Betweenness by enumerating every shortest path, in exact rationals."""
    ids = sorted(g.nodes)
    n = len(ids)
    acc = {v: Fraction(0) for v in ids}
    if n < 3:
        return acc
    for s in ids:
        dist = {s: 0}
        preds: dict[int, list[int]] = {v: [] for v in ids}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.out_neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
                    if dist[w] == dist[v] + 1:
                        preds[w].append(v)
            frontier = nxt
        for t in ids:
            if t == s or t not in dist:
                continue
            paths: list[list[int]] = []
            stack = [[t]]
            while stack:
                path = stack.pop()
                head = path[-1]
                if head == s:
                    paths.append(path)
                    continue
                for p in preds[head]:
                    stack.append(path + [p])
            share = Fraction(1, len(paths))
            for path in paths:
                for v in path[1:-1]:
                    acc[v] += share
    scale = Fraction(1, (n - 1) * (n - 2))
    return {v: acc[v] * scale for v in ids}


def oracle_cascade(
    g: DirectedGraph, seed: int, theta: float, max_days: int
) -> list[set[int]]:
    """Day-by-day active sets by rescanning every node against yesterday.

    A node adopts when at least one account it follows is active and the
    active fraction of the accounts it follows is at least theta.
    """
    active = {seed}
    days = [set(active)]
    for _ in range(max_days):
        newly = set()
        for v in g.nodes:
            if v in active:
                continue
            follows = g.out_neighbors(v)
            if not follows:
                continue
            hit = sum(1 for u in follows if u in active)
            if hit >= 1 and hit / len(follows) >= theta:
                newly.add(v)
        active |= newly
        days.append(set(active))
        if not newly:
            break
    return days


def follower_reachable(g: DirectedGraph, seed: int) -> set[int]:
    """Nodes reachable from the seed walking follower links outward."""
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.in_neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen
