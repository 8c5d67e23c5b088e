"""Influence analysis for directed follow networks.

Load a follow edge list, profile its structure against random baselines,
score nodes by centrality, simulate threshold adoption cascades, and rank
candidate seeds by how far and how fast they spread.
"""

from .baselines import RandomGraphSpec, generate, gnp_random, watts_strogatz
from .centrality import (
    CentralityTable,
    betweenness_centrality,
    centrality_csv,
    combine,
    degree_table,
    eigenvector_centrality,
    full_table,
    top_k,
)
from .cli import PipelineConfig, main, run_pipeline
from .diffusion import (
    DiffusionConfig,
    DiffusionTrace,
    linear_threshold_run,
    spreading_capacity,
    spreading_score,
    threshold_sweep,
    trace_csv,
)
from .errors import ConvergenceError, EdgeListParseError
from .export import export_graph
from .graph import (
    DirectedGraph,
    IngestResult,
    induced_subgraph,
    ingest_edge_csv,
    largest_core,
    parse_edge_csv,
    reverse,
    to_edge_csv,
    weakly_connected_components,
)
from .metrics import (
    NetworkSummary,
    SmallWorldVerdict,
    average_clustering,
    average_path_length,
    diameter,
    local_clustering,
    small_world_sigma,
    summarize,
    summary_csv,
)
from .ranking import (
    CorrelationMatrix,
    RankRecord,
    Recommendation,
    correlation_csv,
    correlation_matrix,
    rank_candidates,
    rank_csv,
    recommend,
    recommendation_json,
    select_candidates,
)

__version__ = "0.1.0"

__all__ = [
    "CentralityTable",
    "ConvergenceError",
    "CorrelationMatrix",
    "DiffusionConfig",
    "DiffusionTrace",
    "DirectedGraph",
    "EdgeListParseError",
    "IngestResult",
    "NetworkSummary",
    "PipelineConfig",
    "RandomGraphSpec",
    "RankRecord",
    "Recommendation",
    "SmallWorldVerdict",
    "average_clustering",
    "average_path_length",
    "betweenness_centrality",
    "centrality_csv",
    "combine",
    "correlation_csv",
    "correlation_matrix",
    "degree_table",
    "diameter",
    "eigenvector_centrality",
    "export_graph",
    "full_table",
    "generate",
    "gnp_random",
    "induced_subgraph",
    "ingest_edge_csv",
    "largest_core",
    "linear_threshold_run",
    "local_clustering",
    "main",
    "parse_edge_csv",
    "rank_candidates",
    "rank_csv",
    "recommend",
    "recommendation_json",
    "reverse",
    "run_pipeline",
    "select_candidates",
    "small_world_sigma",
    "spreading_capacity",
    "spreading_score",
    "summarize",
    "summary_csv",
    "threshold_sweep",
    "to_edge_csv",
    "top_k",
    "trace_csv",
    "watts_strogatz",
    "weakly_connected_components",
]
