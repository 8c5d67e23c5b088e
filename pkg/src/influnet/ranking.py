"""Candidate shortlisting, spreading-score ranking, and the final pick.

Candidates are the union of the top-k lists by follower count,
betweenness, and eigenvector score.  Each candidate seeds one cascade;
candidates are then ordered by spreading score with centrality columns as
tie-breakers.  A correlation matrix over the ranking columns shows which
structural measures track simulated reach.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .centrality import MEASURES, CentralityTable, top_k
from .diffusion import DiffusionConfig, linear_threshold_run, spreading_score
from .graph import DirectedGraph
from .parallel import pmap

RANK_COLUMNS = (
    "node",
    "in_degree",
    "out_degree",
    "eigenvector",
    "betweenness",
    "days_required",
    "proportion_reached",
    "score",
)


@dataclass(frozen=True)
class RankRecord:
    node: int
    in_degree: int
    out_degree: int
    eigenvector: float
    betweenness: float
    days_required: int
    proportion_reached: float
    score: float

    def __post_init__(self) -> None:
        expected = spreading_score(self.proportion_reached, self.days_required)
        if self.score != expected:
            raise ValueError(
                f"score {self.score!r} does not match "
                f"100 * proportion / max(days, 1) = {expected!r}"
            )

    @classmethod
    def build(
        cls,
        node: int,
        in_degree: int,
        out_degree: int,
        eigenvector: float,
        betweenness: float,
        days_required: int,
        proportion_reached: float,
    ) -> "RankRecord":
        """Construct a record, deriving the score from reach and days."""
        return cls(
            node=node,
            in_degree=in_degree,
            out_degree=out_degree,
            eigenvector=eigenvector,
            betweenness=betweenness,
            days_required=days_required,
            proportion_reached=proportion_reached,
            score=spreading_score(proportion_reached, days_required),
        )


@dataclass(frozen=True)
class Recommendation:
    node: int
    score: float
    rationale: dict


def select_candidates(table: CentralityTable, k: int = 10) -> set[int]:
    """Union of the top-k node lists across the three headline measures."""
    chosen: set[int] = set()
    for measure in MEASURES:
        chosen.update(top_k(table, measure, k))
    return chosen


def _rank_key(r: RankRecord) -> tuple:
    return (-r.score, -r.eigenvector, -r.betweenness, -r.in_degree, r.node)


def rank_candidates(
    g: DirectedGraph,
    candidates: Sequence[int] | set[int],
    config: DiffusionConfig,
    table: CentralityTable,
    threads: int = 1,
) -> list[RankRecord]:
    """Seed one cascade per candidate and order the results.

    Primary order is spreading score, descending; ties fall back to
    eigenvector, betweenness, then follower count, and finally the node id
    ascending so equal profiles rank reproducibly.
    """
    pool = sorted(set(candidates))
    if not pool:
        raise ValueError("no candidates to rank")
    missing = [v for v in pool if v not in g]
    if missing:
        raise ValueError(f"candidate(s) not in graph: {missing[:5]}")
    ind = table.column("in_degree")
    outd = table.column("out_degree")
    eig = table.column("eigenvector")
    btw = table.column("betweenness")
    traces = pmap(
        lambda v: linear_threshold_run(g, v, config), pool, threads
    )
    records = [
        RankRecord.build(
            node=v,
            in_degree=ind[v],
            out_degree=outd[v],
            eigenvector=eig[v],
            betweenness=btw[v],
            days_required=tr.saturation_day,
            proportion_reached=tr.proportion_reached,
        )
        for v, tr in zip(pool, traces)
    ]
    records.sort(key=_rank_key)
    return records


def recommend(records: Sequence[RankRecord]) -> Recommendation:
    """Pick the winner and say which structural measures it also leads."""
    if not records:
        raise ValueError("no records to recommend from")
    ordered = sorted(records, key=_rank_key)
    best = ordered[0]
    rationale = {
        "max_in_degree": best.in_degree == max(r.in_degree for r in ordered),
        "max_betweenness": best.betweenness == max(r.betweenness for r in ordered),
        "max_eigenvector": best.eigenvector == max(r.eigenvector for r in ordered),
        "candidates_considered": len(ordered),
        "days_required": best.days_required,
        "proportion_reached": round(best.proportion_reached, 6),
    }
    return Recommendation(node=best.node, score=best.score, rationale=rationale)


UNDEFINED = "undefined"


@dataclass(frozen=True)
class CorrelationMatrix:
    """Pearson coefficients over rank columns; None marks 0/0 cases."""

    labels: tuple[str, ...]
    values: tuple[tuple[float | None, ...], ...]

    def entry(self, row: str, col: str) -> float | None:
        return self.values[self.labels.index(row)][self.labels.index(col)]


def _pearson(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    dx = [x - mx for x in xs]
    dy = [y - my for y in ys]
    vx = math.fsum(d * d for d in dx)
    vy = math.fsum(d * d for d in dy)
    if vx == 0.0 or vy == 0.0:
        return None
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(vx * vy)
    return max(-1.0, min(1.0, r))


def correlation_matrix(records: Sequence[RankRecord]) -> CorrelationMatrix:
    """Pairwise Pearson correlation of every ranking column.

    A column with no variance has no defined correlation with anything,
    itself included; those entries are None rather than a fabricated 0 or 1.
    """
    if len(records) < 2:
        raise ValueError("correlation needs at least 2 records")
    series = {
        name: [float(getattr(r, name)) for r in records] for name in RANK_COLUMNS
    }
    constant = {name for name, xs in series.items() if min(xs) == max(xs)}
    rows: list[tuple[float | None, ...]] = []
    for a in RANK_COLUMNS:
        row: list[float | None] = []
        for b in RANK_COLUMNS:
            if a in constant or b in constant:
                row.append(None)
            elif a == b:
                row.append(1.0)
            else:
                row.append(_pearson(series[a], series[b]))
        rows.append(tuple(row))
    return CorrelationMatrix(labels=RANK_COLUMNS, values=tuple(rows))


RANK_CSV_HEADER = ",".join(RANK_COLUMNS)


def rank_csv(records: Sequence[RankRecord]) -> str:
    out = [RANK_CSV_HEADER]
    for r in records:
        out.append(
            f"{r.node},{r.in_degree},{r.out_degree},{r.eigenvector:.6f},"
            f"{r.betweenness:.6f},{r.days_required},"
            f"{r.proportion_reached:.6f},{r.score:.6f}"
        )
    return "\n".join(out) + "\n"


def rank_json(records: Sequence[RankRecord]) -> str:
    payload = [
        {
            "node": r.node,
            "in_degree": r.in_degree,
            "out_degree": r.out_degree,
            "eigenvector": round(r.eigenvector, 6),
            "betweenness": round(r.betweenness, 6),
            "days_required": r.days_required,
            "proportion_reached": round(r.proportion_reached, 6),
            "score": round(r.score, 6),
        }
        for r in records
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def correlation_csv(matrix: CorrelationMatrix) -> str:
    """Square table with the column labels down the side and across the top."""
    out = ["," + ",".join(matrix.labels)]
    for label, row in zip(matrix.labels, matrix.values):
        cells = [UNDEFINED if v is None else f"{v:.6f}" for v in row]
        out.append(label + "," + ",".join(cells))
    return "\n".join(out) + "\n"


def correlation_json(matrix: CorrelationMatrix) -> str:
    payload = {
        "labels": list(matrix.labels),
        "values": [
            [None if v is None else round(v, 6) for v in row]
            for row in matrix.values
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def recommendation_json(rec: Recommendation) -> str:
    payload = {
        "node": rec.node,
        "score": round(rec.score, 6),
        "rationale": rec.rationale,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
