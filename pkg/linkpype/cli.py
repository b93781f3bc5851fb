"""Command-line interface.

Subcommands:
    run: Full pipeline from an access log to a reorganization plan.
    ingest / preprocess / cluster / mine / plan: The pipeline in parts, each
        reading the reports the previous part left in the output directory.
    bench: Farthest-first versus k-means comparison.
    gen: Synthetic demo site and access log.

Exit codes are 0 on success, 1 for usage and configuration errors, 2 for input
errors and 3 for internal consistency errors.
"""

import importlib
import logging
import sys
from pathlib import Path

import typer

from linkpype.bench import bench_compare
from linkpype.config import PipelineConfig, load_config, parse_values
from linkpype.errors import ConfigError, ExitCode, PipelineError
from linkpype.ingest.synthetic import generate_synthetic_logs
from linkpype.pipeline import manager
from linkpype.pipeline.stage import PipelineStage, PipelineState
from linkpype.sitegraph.io import demo_site, write_graph

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_FILE_NAME = "access.log"

app = typer.Typer(
    help="Reorganize website links from access-log usage patterns",
    no_args_is_help=True,
)

CONFIG_OPTION = typer.Option(None, "--config", "-c", help="key = value configuration file")
OUT_OPTION = typer.Option(Path("out"), "--out", "-o", help="Report directory")
GRAPH_OPTION = typer.Option(None, "--graph", "-g", help="Site graph file; inferred when omitted")
SEED_OPTION = typer.Option(None, "--seed", help="Overrides rng_seed")
SET_OPTION = typer.Option(None, "--set", help="Override a configuration key (key=value)")


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def _fail(error: PipelineError) -> typer.Exit:
    typer.echo(str(error), err=True)
    return typer.Exit(code=int(error.exit_code))


def _config(config_path: Path | None, seed: int | None, set_values: list[str] | None) -> PipelineConfig:
    try:
        config = load_config(config_path) if config_path is not None else PipelineConfig()
        overrides = parse_values("\n".join(set_values or []), source="--set")
        if seed is not None:
            overrides["rng_seed"] = seed
        return config.with_overrides(**overrides)
    except ConfigError as e:
        raise _fail(PipelineError("config", str(e), ExitCode.USAGE)) from e
    except OSError as e:
        raise _fail(PipelineError("config", str(e), ExitCode.USAGE)) from e


def _execute(stages: list[PipelineStage], state: PipelineState) -> PipelineState:
    try:
        return manager.PipelineManager(stages).execute(state)
    except PipelineError as e:
        raise _fail(e) from e


def _report(state: PipelineState) -> None:
    summary = state.summary
    typer.echo(
        f"{summary.get('matched_candidates', 0)} candidates, "
        f"{summary.get('accepted_links', 0)} accepted links, "
        f"mean improved efficiency {summary.get('mean_improved_efficiency_pct', 'none')}"
    )


@app.command()
def run(
    log: Path = typer.Option(..., "--log", "-l", help="Access log file"),
    graph: Path | None = GRAPH_OPTION,
    out: Path = OUT_OPTION,
    config: Path | None = CONFIG_OPTION,
    seed: int | None = SEED_OPTION,
    set_values: list[str] | None = SET_OPTION,
) -> None:
    """Run the full pipeline and write every report."""
    state = PipelineState(
        config=_config(config, seed, set_values), out_dir=out, log_path=log, graph_path=graph
    )
    _report(_execute(manager.full_stages(), state))


@app.command()
def ingest(
    log: Path = typer.Option(..., "--log", "-l", help="Access log file"),
    out: Path = OUT_OPTION,
    config: Path | None = CONFIG_OPTION,
) -> None:
    """Parse and clean an access log into records.tsv."""
    state = PipelineState(config=_config(config, None, None), out_dir=out, log_path=log)
    state = _execute(manager.ingest_stages(), state)
    typer.echo(
        f"{state.summary['lines_parsed']} lines parsed, "
        f"{state.summary['lines_skipped']} skipped, "
        f"{state.summary['records_clean']} page records"
    )


@app.command()
def preprocess(
    out: Path = OUT_OPTION,
    graph: Path | None = GRAPH_OPTION,
    config: Path | None = CONFIG_OPTION,
    set_values: list[str] | None = SET_OPTION,
) -> None:
    """Build sessions, page statistics and transactions from records.tsv."""
    state = PipelineState(
        config=_config(config, None, set_values), out_dir=out, graph_path=graph
    )
    state = _execute(manager.preprocess_stages(), state)
    typer.echo(f"{state.summary['sessions']} sessions over {state.summary['pages']} pages")


@app.command()
def cluster(
    out: Path = OUT_OPTION,
    config: Path | None = CONFIG_OPTION,
    set_values: list[str] | None = SET_OPTION,
) -> None:
    """Cluster the pages of page_stats.tsv by farthest-first traversal."""
    state = PipelineState(config=_config(config, None, set_values), out_dir=out)
    state = _execute(manager.cluster_stages(), state)
    typer.echo(f"{state.summary['pages_clustered']} pages in {state.summary['clusters']} clusters")


@app.command()
def mine(
    out: Path = OUT_OPTION,
    config: Path | None = CONFIG_OPTION,
    set_values: list[str] | None = SET_OPTION,
) -> None:
    """Mine frequent itemsets, rules and candidate links from sequences.txt."""
    state = PipelineState(config=_config(config, None, set_values), out_dir=out)
    state = _execute(manager.mine_stages(), state)
    typer.echo(
        f"{state.summary['frequent_itemsets']} itemsets, {state.summary['rules']} rules, "
        f"{state.summary['candidates']} candidate links"
    )


@app.command()
def plan(
    out: Path = OUT_OPTION,
    graph: Path | None = GRAPH_OPTION,
    config: Path | None = CONFIG_OPTION,
    set_values: list[str] | None = SET_OPTION,
) -> None:
    """Match candidates with clusters and build the reorganization plan."""
    state = PipelineState(
        config=_config(config, None, set_values), out_dir=out, graph_path=graph
    )
    _report(_execute(manager.plan_stages(), state))


@app.command()
def bench(
    n: int = typer.Option(6000, "--n", help="Number of points"),
    k: int = typer.Option(5, "--k", help="Number of clusters"),
    t_min: int = typer.Option(3, "--t-min", help="Minimum k-means iterations"),
    seed: int = typer.Option(0, "--seed", help="Seed of the random points"),
    repeats: int = typer.Option(3, "--repeats", help="Timed runs per algorithm"),
) -> None:
    """Compare farthest-first and k-means on random points."""
    try:
        result = bench_compare(n, k, t_min=t_min, rng_seed=seed, repeats=repeats)
    except ValueError as e:
        raise _fail(PipelineError("bench", str(e), ExitCode.USAGE)) from e
    for key, value in result.items():
        typer.echo(f"{key}={value}")


@app.command()
def gen(
    out: Path = OUT_OPTION,
    pages: int = typer.Option(15, "--pages", help="Pages of the demo site"),
    users: int = typer.Option(50, "--users", help="Simulated users"),
    steps: int = typer.Option(10, "--steps", help="Requests per user"),
    seed: int = typer.Option(0, "--seed", help="Seed of the site and the walks"),
    back: float = typer.Option(
        0.0, "--back-probability", help="Chance of an unlogged back-button return per step"
    ),
) -> None:
    """Write a demo site graph and a synthetic access log."""
    try:
        site = demo_site(pages, rng_seed=seed)
        lines = generate_synthetic_logs(
            site, users, steps, rng_seed=seed, back_probability=back
        )
        out.mkdir(parents=True, exist_ok=True)
        write_graph(site, out / "site.graph")
        (out / LOG_FILE_NAME).write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    except (ValueError, OSError) as e:
        raise _fail(PipelineError("gen", str(e), ExitCode.INPUT)) from e
    typer.echo(f"{len(lines)} log lines for {users} users over {site.n} pages in {out}")


# Newer typer releases vendor their own click; the error types must come from
# the copy typer raises.
_click_errors = importlib.import_module(typer.BadParameter.__module__)
UsageError = _click_errors.UsageError
ClickException = _click_errors.ClickException
Abort = _click_errors.Abort


def main() -> None:
    """Console entry point; maps usage errors to exit code 1."""
    try:
        code = app(standalone_mode=False)
    except UsageError as e:
        e.show()
        code = ExitCode.USAGE
    except ClickException as e:
        e.show()
        code = e.exit_code
    except Abort:
        code = ExitCode.USAGE
    sys.exit(int(code) if isinstance(code, int) else 0)
