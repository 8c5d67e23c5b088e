"""Linear-threshold adoption simulation.

Influence runs opposite to the follow arrows: an account is exposed to
whatever the accounts it follows have adopted.  So the influencers of v
are its out-neighbors in the follow graph, which is exactly its in-edge
set after flipping every arc.  Days advance synchronously: each day every
inactive account adopts when the adopted fraction of the accounts it
follows reaches the threshold, judged against yesterday's state.  A node
only ever flips to active, never back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import DirectedGraph


@dataclass(frozen=True)
class DiffusionConfig:
    theta: float = 0.1
    max_days: int = 15

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta must be in [0, 1], got {self.theta}")
        if self.max_days < 1:
            raise ValueError("max_days must be >= 1")


@dataclass(frozen=True)
class DiffusionTrace:
    """Active-count history of one seeded run; index 0 is seeding day."""

    seed: int
    theta: float
    active_counts: tuple[int, ...]
    population: int

    def __post_init__(self) -> None:
        if self.population < 1:
            raise ValueError("population must be >= 1")
        if not self.active_counts or self.active_counts[0] != 1:
            raise ValueError("a trace starts with the lone seed on day 0")
        if any(b < a for a, b in zip(self.active_counts, self.active_counts[1:])):
            raise ValueError("active counts cannot decrease")
        if self.active_counts[-1] > self.population:
            raise ValueError("active count exceeds population")

    @property
    def final_active(self) -> int:
        return self.active_counts[-1]

    @property
    def proportion_reached(self) -> float:
        return self.final_active / self.population

    @property
    def saturation_day(self) -> int:
        """First day on which the final active count was reached."""
        return self.active_counts.index(self.final_active)


def linear_threshold_run(
    g: DirectedGraph, seed: int, config: DiffusionConfig
) -> DiffusionTrace:
    """Run one cascade from ``seed`` until a day adds nobody or days run out.

    A node adopts once at least one account it follows is active and the
    active fraction of the accounts it follows is at least theta.
    """
    if seed not in g:
        raise ValueError(f"seed {seed} is not a node of the graph")
    active = {seed}
    exposed: dict[int, int] = {}
    counts = [1]
    newly: Iterable[int] = (seed,)
    for _ in range(config.max_days):
        touched: set[int] = set()
        for u in newly:
            for v in g.in_neighbors(u):
                if v not in active:
                    exposed[v] = exposed.get(v, 0) + 1
                    touched.add(v)
        newly = [
            v for v in touched if exposed[v] / g.out_degree(v) >= config.theta
        ]
        active.update(newly)
        counts.append(len(active))
        if not newly:
            break
    return DiffusionTrace(
        seed=seed,
        theta=config.theta,
        active_counts=tuple(counts),
        population=g.node_count,
    )


def spreading_score(proportion_reached: float, saturation_day: int) -> float:
    """Reach scaled against time to reach it.

    100 * proportion / max(saturation_day, 1); the floor keeps a cascade
    that never leaves its seed from dividing by zero.
    """
    if not 0.0 <= proportion_reached <= 1.0:
        raise ValueError("proportion_reached must be in [0, 1]")
    if saturation_day < 0:
        raise ValueError("saturation_day cannot be negative")
    return 100.0 * proportion_reached / max(saturation_day, 1)


def spreading_capacity(trace: DiffusionTrace) -> float:
    return spreading_score(trace.proportion_reached, trace.saturation_day)


def threshold_sweep(
    g: DirectedGraph,
    seed: int,
    thetas: Sequence[float] = (0.01, 0.05, 0.1, 0.2),
    max_days: int = 15,
) -> list[DiffusionTrace]:
    """Repeat one seed's cascade across a grid of thresholds."""
    if not thetas:
        raise ValueError("thetas must be non-empty")
    return [
        linear_threshold_run(g, seed, DiffusionConfig(theta=t, max_days=max_days))
        for t in thetas
    ]


TRACE_CSV_HEADER = "seed,theta,day,active_count,proportion"


def trace_csv(traces: Iterable[DiffusionTrace]) -> str:
    """One row per simulated day, traces in the order given."""
    out = [TRACE_CSV_HEADER]
    for tr in traces:
        for day, count in enumerate(tr.active_counts):
            out.append(
                f"{tr.seed},{tr.theta:.6f},{day},{count},"
                f"{count / tr.population:.6f}"
            )
    return "\n".join(out) + "\n"


def trace_json(traces: Sequence[DiffusionTrace]) -> str:
    payload = [
        {
            "seed": tr.seed,
            "theta": round(tr.theta, 6),
            "active_counts": list(tr.active_counts),
            "population": tr.population,
            "saturation_day": tr.saturation_day,
            "proportion_reached": round(tr.proportion_reached, 6),
            "score": round(spreading_capacity(tr), 6),
        }
        for tr in traces
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
