"""Node importance measures on the follow graph.

Betweenness runs over directed shortest paths and is normalized by
(n - 1)(n - 2), the count of ordered pairs a node could sit between.
Eigenvector centrality scores flow along influence: an account's score is
the sum of its followers' scores, iterated to a fixed point under an L2
norm.  Degree columns come straight off the adjacency.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, replace

from .errors import ConvergenceError
from .graph import DirectedGraph
from .parallel import pmap

log = logging.getLogger(__name__)

MEASURES = ("in_degree", "betweenness", "eigenvector")


@dataclass(frozen=True)
class CentralityTable:
    """Per-node score columns; a column is None until computed."""

    in_degree: dict[int, int] | None = None
    out_degree: dict[int, int] | None = None
    betweenness: dict[int, float] | None = None
    eigenvector: dict[int, float] | None = None

    def column(self, measure: str) -> dict:
        if measure not in ("in_degree", "out_degree", "betweenness", "eigenvector"):
            raise ValueError(f"unknown measure {measure!r}")
        col = getattr(self, measure)
        if col is None:
            raise ValueError(f"measure {measure!r} has not been computed")
        return col


def combine(*tables: CentralityTable) -> CentralityTable:
    """Merge partial tables; later non-empty columns win."""
    merged = CentralityTable()
    for t in tables:
        for name in ("in_degree", "out_degree", "betweenness", "eigenvector"):
            col = getattr(t, name)
            if col is not None:
                merged = replace(merged, **{name: col})
    return merged


def degree_table(g: DirectedGraph) -> CentralityTable:
    """In-degree (follower count) and out-degree (following count) per node."""
    return CentralityTable(
        in_degree={n: g.in_degree(n) for n in g.nodes},
        out_degree={n: g.out_degree(n) for n in g.nodes},
    )


def _brandes_source(adj: list[list[int]], s: int) -> list[float]:
    """One source's dependency contribution to every node (Brandes)."""
    n = len(adj)
    sigma = [0] * n
    dist = [-1] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    sigma[s] = 1
    dist[s] = 0
    order: list[int] = []
    queue = [s]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        order.append(v)
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    delta = [0.0] * n
    contrib = [0.0] * n
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
        if w != s:
            contrib[w] = delta[w]
    return contrib


def betweenness_centrality(g: DirectedGraph, threads: int = 1) -> CentralityTable:
    """Fraction of directed shortest paths passing through each node.

    Scores are summed per source in node order, so the result is identical
    for every thread count.
    """
    ids = sorted(g.nodes)
    n = len(ids)
    if n < 3:
        log.warning("betweenness is identically 0 on graphs with fewer than 3 nodes")
        return CentralityTable(betweenness={v: 0.0 for v in ids})
    pos = {v: k for k, v in enumerate(ids)}
    adj = [[pos[w] for w in g.out_neighbors(v)] for v in ids]
    acc = [0.0] * n
    for contrib in pmap(lambda s: _brandes_source(adj, s), range(n), threads):
        for k in range(n):
            acc[k] += contrib[k]
    scale = 1.0 / ((n - 1) * (n - 2))
    return CentralityTable(betweenness={ids[k]: acc[k] * scale for k in range(n)})


def eigenvector_centrality(
    g: DirectedGraph,
    tol: float = 1e-10,
    max_iter: int = 1000,
    start: dict[int, float] | None = None,
) -> CentralityTable:
    """Dominant-eigenvector scores by power iteration.

    Each step replaces a node's score with the sum of its followers'
    scores, then renormalizes to unit L2 norm.  Iteration stops once the
    largest componentwise change drops below ``tol`` and the vector is an
    eigenvector to within a small residual; exceeding ``max_iter`` raises
    :class:`ConvergenceError` carrying the last iterate.
    """
    if g.node_count == 0:
        raise ValueError("empty graph")
    ids = sorted(g.nodes)
    n = len(ids)
    pos = {v: k for k, v in enumerate(ids)}
    followers = [[pos[u] for u in g.in_neighbors(v)] for v in ids]
    if start is None:
        x = [1.0 / math.sqrt(n)] * n
    else:
        if set(start) != set(ids):
            raise ValueError("start vector must cover exactly the graph's nodes")
        norm = math.sqrt(math.fsum(start[v] * start[v] for v in ids))
        if norm == 0.0:
            raise ValueError("start vector must be nonzero")
        x = [start[v] / norm for v in ids]
    residual = math.inf
    for _ in range(max_iter):
        y = [math.fsum(x[u] for u in followers[v]) for v in range(n)]
        norm = math.sqrt(math.fsum(c * c for c in y))
        if norm == 0.0:
            # x is annihilated by the step: an exact eigenvector for 0.
            return CentralityTable(eigenvector={ids[k]: x[k] for k in range(n)})
        lam = math.fsum(x[k] * y[k] for k in range(n))
        residual = max(abs(y[k] - lam * x[k]) for k in range(n))
        y = [c / norm for c in y]
        change = max(abs(y[k] - x[k]) for k in range(n))
        if change < tol and residual < 10.0 * tol:
            return CentralityTable(eigenvector={ids[k]: x[k] for k in range(n)})
        x = y
    raise ConvergenceError(
        f"eigenvector iteration did not settle within {max_iter} steps",
        iterate={ids[k]: x[k] for k in range(n)},
        residual=residual,
    )


def full_table(
    g: DirectedGraph,
    tol: float = 1e-10,
    max_iter: int = 1000,
    threads: int = 1,
) -> CentralityTable:
    """All four measures for one graph."""
    return combine(
        degree_table(g),
        betweenness_centrality(g, threads=threads),
        eigenvector_centrality(g, tol=tol, max_iter=max_iter),
    )


def top_k(table: CentralityTable, measure: str, k: int) -> list[int]:
    """Node ids with the k highest scores; ties fall to the smaller id."""
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}; choose from {MEASURES}")
    if k < 1:
        raise ValueError("k must be >= 1")
    col = table.column(measure)
    ranked = sorted(col, key=lambda v: (-col[v], v))
    return ranked[:k]


CENTRALITY_CSV_HEADER = "node,in_degree,out_degree,betweenness,eigenvector"


def centrality_csv(table: CentralityTable) -> str:
    """Render a full table as CSV, sorted by in-degree then node id."""
    ind = table.column("in_degree")
    outd = table.column("out_degree")
    btw = table.column("betweenness")
    eig = table.column("eigenvector")
    out = [CENTRALITY_CSV_HEADER]
    for v in sorted(ind, key=lambda v: (-ind[v], v)):
        out.append(f"{v},{ind[v]},{outd[v]},{btw[v]:.6f},{eig[v]:.6f}")
    return "\n".join(out) + "\n"


def centrality_json(table: CentralityTable) -> str:
    ind = table.column("in_degree")
    outd = table.column("out_degree")
    btw = table.column("betweenness")
    eig = table.column("eigenvector")
    payload = [
        {
            "node": v,
            "in_degree": ind[v],
            "out_degree": outd[v],
            "betweenness": round(btw[v], 6),
            "eigenvector": round(eig[v], 6),
        }
        for v in sorted(ind, key=lambda v: (-ind[v], v))
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
