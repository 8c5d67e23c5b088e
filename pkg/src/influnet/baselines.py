"""Seeded undirected reference graphs.

Both generators draw from ``random.Random``, whose Mersenne Twister
stream is identical on every platform, so a (spec, seed) pair names one
reproducible graph.  Node pairs are visited in lexicographic order and
every random decision happens in that fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import DirectedGraph


def gnp_random(n: int, p: float, rng_seed: int) -> DirectedGraph:
    """Erdos-Renyi G(n, p): each unordered pair tossed once."""
    _check_n(n)
    _check_prob(p, "p")
    rng = random.Random(rng_seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return DirectedGraph(edges, nodes=range(n), directed=False)


def watts_strogatz(n: int, k: int, p_rewire: float, rng_seed: int) -> DirectedGraph:
    """Ring lattice of degree k with each edge rewired with probability p.

    Edges (i, i+j) for j = 1..k/2 are visited ring by ring; a rewired edge
    keeps endpoint i and moves the far end to a uniformly drawn node,
    redrawing on self-loops and existing edges.  Edge count stays n*k/2.
    """
    _check_n(n)
    _check_prob(p_rewire, "p_rewire")
    if k < 2 or k % 2 != 0:
        raise ValueError(f"k must be a positive even integer, got {k}")
    if k >= n:
        raise ValueError(f"k must be smaller than n, got k={k} n={n}")
    rng = random.Random(rng_seed)
    nbrs: dict[int, set[int]] = {i: set() for i in range(n)}
    for j in range(1, k // 2 + 1):
        for i in range(n):
            w = (i + j) % n
            nbrs[i].add(w)
            nbrs[w].add(i)
    for j in range(1, k // 2 + 1):
        for i in range(n):
            old = (i + j) % n
            if rng.random() >= p_rewire:
                continue
            if len(nbrs[i]) >= n - 1:
                # i is already joined to everyone else; nothing to move to.
                continue
            if old not in nbrs[i]:
                # The lattice edge was already moved away by an earlier pass.
                continue
            w = rng.randrange(n)
            while w == i or w in nbrs[i]:
                w = rng.randrange(n)
            nbrs[i].remove(old)
            nbrs[old].remove(i)
            nbrs[i].add(w)
            nbrs[w].add(i)
    edges = [(i, w) for i in range(n) for w in nbrs[i] if i < w]
    return DirectedGraph(edges, nodes=range(n), directed=False)


@dataclass(frozen=True)
class RandomGraphSpec:
    """Recipe naming one reproducible baseline graph."""

    model: str
    n: int
    p: float
    rng_seed: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.model not in ("gnp", "watts_strogatz"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "watts_strogatz" and self.k is None:
            raise ValueError("watts_strogatz needs k")


def generate(spec: RandomGraphSpec) -> DirectedGraph:
    """Materialize the graph a spec names."""
    if spec.model == "gnp":
        return gnp_random(spec.n, spec.p, spec.rng_seed)
    assert spec.k is not None
    return watts_strogatz(spec.n, spec.k, spec.p, spec.rng_seed)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def _check_prob(p: float, name: str) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {p}")
