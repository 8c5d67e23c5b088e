"""Command-line front end.

Every subcommand reads the same two-column follow CSV and writes one
report to stdout or a file; ``pipeline`` chains the whole analysis and
writes a report directory.  Exit codes: 0 success, 1 usage error, 2
unreadable or invalid data, 3 iteration failed to converge.  Reruns with
the same inputs and seed are byte-identical; ``--threads`` changes the
schedule, never the bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import baselines, centrality, diffusion, export, metrics, ranking
from .errors import ConvergenceError, EdgeListParseError
from .graph import DirectedGraph, ingest_edge_csv, largest_core

log = logging.getLogger(__name__)

DEFAULT_THETAS = (0.01, 0.05, 0.1, 0.2)


@dataclass
class PipelineConfig:
    input_path: Path
    theta: float = 0.1
    max_days: int = 15
    top_k: int = 10
    thetas: tuple[float, ...] = DEFAULT_THETAS
    use_core: bool = True
    rng_seed: int = 0
    output_format: str = "csv"
    out_dir: Path = Path("report")
    threads: int = 1
    tol: float = 1e-10
    max_iter: int = 1000


def _read_graph(path: Path) -> DirectedGraph:
    with path.open("r", encoding="utf-8") as fh:
        result = ingest_edge_csv(fh)
    if result.self_loops_dropped or result.duplicates_dropped:
        log.info(
            "ingested %s: dropped %d self-loop(s), %d duplicate(s)",
            path,
            result.self_loops_dropped,
            result.duplicates_dropped,
        )
    return result.graph


def _region(g: DirectedGraph, use_core: bool) -> DirectedGraph:
    return largest_core(g) if use_core else g


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_stats(args: argparse.Namespace) -> int:
    g = _read_graph(Path(args.input))
    rows = [("full", metrics.summarize(g, threads=args.threads))]
    core = largest_core(g)
    if core.node_count >= 2:
        rows.append(("core", metrics.summarize(core, threads=args.threads)))
    text = (
        metrics.summary_json(rows)
        if args.format == "json"
        else metrics.summary_csv(rows)
    )
    _emit(text, args.out)
    return 0


def _cmd_centrality(args: argparse.Namespace) -> int:
    g = _region(_read_graph(Path(args.input)), not args.full_network)
    table = centrality.full_table(
        g, tol=args.tol, max_iter=args.max_iter, threads=args.threads
    )
    text = (
        centrality.centrality_json(table)
        if args.format == "json"
        else centrality.centrality_csv(table)
    )
    _emit(text, args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    g = _region(_read_graph(Path(args.input)), not args.full_network)
    if args.seed_node is not None:
        seed = args.seed_node
    else:
        seed = max(sorted(g.nodes), key=lambda v: g.in_degree(v))
    traces = diffusion.threshold_sweep(g, seed, args.thetas, args.days)
    text = (
        diffusion.trace_json(traces)
        if args.format == "json"
        else diffusion.trace_csv(traces)
    )
    _emit(text, args.out)
    return 0


def _ranked_records(args: argparse.Namespace) -> list[ranking.RankRecord]:
    g = _region(_read_graph(Path(args.input)), not args.full_network)
    table = centrality.full_table(
        g, tol=args.tol, max_iter=args.max_iter, threads=args.threads
    )
    candidates = ranking.select_candidates(table, args.k)
    config = diffusion.DiffusionConfig(theta=args.theta, max_days=args.days)
    return ranking.rank_candidates(g, candidates, config, table, threads=args.threads)


def _cmd_rank(args: argparse.Namespace) -> int:
    records = _ranked_records(args)
    text = (
        ranking.rank_json(records)
        if args.format == "json"
        else ranking.rank_csv(records)
    )
    _emit(text, args.out)
    return 0


def _cmd_correlate(args: argparse.Namespace) -> int:
    matrix = ranking.correlation_matrix(_ranked_records(args))
    text = (
        ranking.correlation_json(matrix)
        if args.format == "json"
        else ranking.correlation_csv(matrix)
    )
    _emit(text, args.out)
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    g = _read_graph(Path(args.input))
    actual = metrics.summarize(g, threads=args.threads)
    rows = [("actual", actual)]
    verdicts = []
    ps = args.p if args.p else [0.05, 0.10]
    for idx, p in enumerate(ps):
        spec = baselines.RandomGraphSpec(
            model=args.model,
            n=g.node_count,
            p=p,
            rng_seed=args.seed + idx,
            k=args.ws_k if args.model == "watts_strogatz" else None,
        )
        label = f"{spec.model}_p{p:g}"
        base = metrics.summarize(baselines.generate(spec), threads=args.threads)
        rows.append((label, base))
        verdict = metrics.small_world_sigma(actual, base)
        verdicts.append((label, verdict))
        log.info(
            "sigma vs %s: %.6f (%s)",
            label,
            verdict.sigma,
            "small-world" if verdict.is_small_world else "not small-world",
        )
    if args.format == "json":
        payload = {
            "summaries": [
                {
                    "network": label,
                    "nodes": s.node_count,
                    "edges": s.edge_count,
                    "avg_path_length": round(s.average_path_length, 6),
                    "avg_clustering": round(s.average_clustering, 6),
                    "diameter": s.diameter,
                    "components": s.component_count,
                }
                for label, s in rows
            ],
            "verdicts": [
                {
                    "baseline": label,
                    "sigma": round(v.sigma, 6),
                    "clustering_ratio": round(v.clustering_ratio, 6),
                    "path_length_ratio": round(v.path_length_ratio, 6),
                    "is_small_world": v.is_small_world,
                }
                for label, v in verdicts
            ],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = metrics.summary_csv(rows)
    _emit(text, args.out)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    g = _read_graph(Path(args.input))
    if args.core:
        g = largest_core(g)
    _emit(export.export_graph(g, args.format), args.out)
    return 0


def run_pipeline(config: PipelineConfig) -> ranking.Recommendation:
    """Execute the full analysis and write the report directory.

    Everything is computed before anything is written, so a failure never
    leaves a half-finished report behind.
    """
    g = _read_graph(config.input_path)
    core = largest_core(g)
    summary_rows = [("full", metrics.summarize(g, threads=config.threads))]
    if core.node_count >= 2:
        summary_rows.append(("core", metrics.summarize(core, threads=config.threads)))
    region = core if config.use_core else g
    table = centrality.full_table(
        region, tol=config.tol, max_iter=config.max_iter, threads=config.threads
    )
    candidates = ranking.select_candidates(table, config.top_k)
    diff_config = diffusion.DiffusionConfig(theta=config.theta, max_days=config.max_days)
    records = ranking.rank_candidates(
        region, candidates, diff_config, table, threads=config.threads
    )
    matrix = ranking.correlation_matrix(records)
    rec = ranking.recommend(records)

    if config.output_format == "json":
        files = {
            "summary.json": metrics.summary_json(summary_rows),
            "centrality.json": centrality.centrality_json(table),
            "rank.json": ranking.rank_json(records),
            "correlation.json": ranking.correlation_json(matrix),
        }
    else:
        files = {
            "summary.csv": metrics.summary_csv(summary_rows),
            "centrality.csv": centrality.centrality_csv(table),
            "rank.csv": ranking.rank_csv(records),
            "correlation.csv": ranking.correlation_csv(matrix),
        }
    files["recommendation.json"] = ranking.recommendation_json(rec)

    config.out_dir.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (config.out_dir / name).write_text(text, encoding="utf-8")
    log.info(
        "recommended node %d (score %.6f); report in %s", rec.node, rec.score, config.out_dir
    )
    return rec


def _cmd_pipeline(args: argparse.Namespace) -> int:
    config = PipelineConfig(
        input_path=Path(args.input),
        theta=args.theta,
        max_days=args.days,
        top_k=args.k,
        use_core=not args.full_network,
        rng_seed=args.seed,
        output_format=args.format,
        out_dir=Path(args.out),
        threads=args.threads,
        tol=args.tol,
        max_iter=args.max_iter,
    )
    run_pipeline(config)
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse reserves status 2 for usage errors; this CLI uses 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, region_flag: bool = True) -> None:
    p.add_argument("--input", required=True, help="edge CSV (header i,j)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--threads", type=int, default=1, help="worker threads")
    if region_flag:
        p.add_argument(
            "--full-network",
            action="store_true",
            help="analyze the whole graph instead of the largest component",
        )


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-10, help="eigenvector tolerance")
    p.add_argument("--max-iter", type=int, default=1000, help="eigenvector iteration cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="influnet",
        description="Find the account best placed to spread a message in a follow network.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="structural summary of the network and its core")
    _add_common(p, region_flag=False)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("centrality", help="degree, betweenness, and eigenvector table")
    _add_common(p)
    _add_solver(p)
    p.set_defaults(func=_cmd_centrality)

    p = sub.add_parser("sweep", help="one seed's cascade across several thresholds")
    _add_common(p)
    p.add_argument(
        "--seed-node",
        type=int,
        default=None,
        help="cascade seed (default: node with most followers)",
    )
    p.add_argument("--thetas", type=float, nargs="+", default=list(DEFAULT_THETAS))
    p.add_argument("--days", type=int, default=15, help="day cap per cascade")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("rank", help="rank candidate seeds by spreading score")
    _add_common(p)
    _add_solver(p)
    p.add_argument("--k", type=int, default=10, help="top-k per centrality measure")
    p.add_argument("--theta", type=float, default=0.1, help="adoption threshold")
    p.add_argument("--days", type=int, default=15, help="day cap per cascade")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("correlate", help="correlation matrix over the ranking columns")
    _add_common(p)
    _add_solver(p)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--theta", type=float, default=0.1)
    p.add_argument("--days", type=int, default=15)
    p.set_defaults(func=_cmd_correlate)

    p = sub.add_parser("baseline", help="compare against seeded random graphs")
    _add_common(p, region_flag=False)
    p.add_argument("--model", choices=("gnp", "watts_strogatz"), default="gnp")
    p.add_argument(
        "--p",
        type=float,
        action="append",
        help="edge (or rewire) probability; repeatable (default 0.05 and 0.10)",
    )
    p.add_argument("--ws-k", type=int, default=10, help="lattice degree for watts_strogatz")
    p.add_argument("--seed", type=int, default=0, help="base RNG seed; baseline i adds i")
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("export", help="write the graph for external viewers")
    p.add_argument("--input", required=True, help="edge CSV (header i,j)")
    p.add_argument("--format", choices=export.FORMATS, default="dot")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--core", action="store_true", help="export only the largest component")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("pipeline", help="full analysis into a report directory")
    p.add_argument("--input", required=True, help="edge CSV (header i,j)")
    p.add_argument("--theta", type=float, default=0.1)
    p.add_argument("--days", type=int, default=15)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--full-network", action="store_true")
    p.add_argument("--seed", type=int, default=0, help="seed for any randomized stage")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="report", help="report directory")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.set_defaults(func=_cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(message)s",
        force=True,
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (EdgeListParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
