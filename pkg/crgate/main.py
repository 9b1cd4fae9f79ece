import logging
import sys
import time
import typing as t
from pathlib import Path
import click
from dotenv import load_dotenv
from crgate.functions.config import device_params, load_config, with_overrides
from crgate.functions.estimates import feasibility_check, leakage_estimates
from crgate.functions.gate import extract_gate
from crgate.functions.leakage import simulated_leakage
from crgate.functions.reports import (
    gate_report_frame,
    gate_summary,
    timing_summary,
    trace_table,
    validation_summary,
    write_csv,
    write_meta,
    write_text,
)
from crgate.functions.run_protocol import run_protocol
from crgate.functions.schedule import build_schedule
from crgate.functions.sweep import run_sweep
from crgate.functions.validation import run_validation
from crgate.models.RunConfig import RunConfig
from crgate.models.Tier import Tier

load_dotenv()
logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(message)s')

EXIT_OK = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_CONFIG_ERROR = 2

F = t.TypeVar("F", bound=t.Callable[..., t.Any])


def run_options(func: F) -> F:
    options = [
        click.option("--config", "config_path", type=click.Path(), default=None, help="TOML run configuration."),
        click.option("--out", "out_dir", type=click.Path(file_okay=False), default="./crgate_out", show_default=True),
        click.option("--tier", type=click.Choice([tier.value for tier in Tier]), default=None),
        click.option("--n", "n", type=int, default=None, help="Number of qubits, target included."),
        click.option("--theta", type=str, default=None, help="Rotation angle in radians or a preset name."),
        click.option("--verbose", "-v", is_flag=True, default=False),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def load_run_config(config_path: str | None, tier: str | None, n: int | None, theta: str | None, verbose: bool) -> RunConfig:
    if verbose:
        logging.getLogger().setLevel(logging.INFO)
    try:
        return with_overrides(load_config(config_path), tier=tier, n=n, theta=theta)
    except (OSError, ValueError) as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)


@click.group()
def cli() -> None:
    pass


@cli.command()
@run_options
def validate(config_path: str | None, out_dir: str, tier: str | None, n: int | None, theta: str | None, verbose: bool) -> None:
    """Eigenstructure, unitarity, exactness and feasibility checks."""
    start = time.time()
    config = load_run_config(config_path, tier, n, theta, verbose)
    try:
        results = run_validation(config, logger=logging.getLogger("validate"))
    except ValueError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)

    summary = validation_summary(results)
    click.echo(summary)
    write_text(summary, Path(out_dir) / "summary.txt")
    write_meta(Path(out_dir), "validate", config_path, time.time() - start)
    sys.exit(EXIT_VALIDATION_FAILURE if any(result.failed for result in results) else EXIT_OK)


@cli.command()
@run_options
def run(config_path: str | None, out_dir: str, tier: str | None, n: int | None, theta: str | None, verbose: bool) -> None:
    """Runs the protocol on every computational input and writes gate_report.csv."""
    start = time.time()
    config = load_run_config(config_path, tier, n, theta, verbose)
    logger = logging.getLogger("run")
    try:
        params = device_params(config)
        schedule = build_schedule(
            config.n, params, config.tier, config.photon_cutoff, config.steps_per_cavity_period, config.thresholds, logger=logger
        )
        report = extract_gate(schedule, logger=logger)
        traces = {
            label: run_protocol(label, schedule, logger=logger)[1]
            for label in ("1" * (config.n - 1) + "|0|0c", "1" * (config.n - 1) + "|1|0c")
        }
        estimates = leakage_estimates(config.n, params, logger=logger)
        feasibility = feasibility_check(config.n, params, config.thresholds, logger=logger)
    except ValueError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)

    sections = [gate_summary(report, estimates, feasibility)]
    if config.tier == Tier.T1 and estimates.p1 is not None:
        peak = simulated_leakage(config.n, params, config.leakage_samples, config.photon_cutoff, logger=logger)
        sections.append(f"Peak |J,-J+2> population {peak:.6g}, p1 estimate {estimates.p1:.6g}, worst final leakage {report.max_leakage:.6g}")
    sections.extend(trace_table(label, trace) for label, trace in traces.items())
    summary = "\n\n".join(sections)

    click.echo(summary)
    write_text(summary, Path(out_dir) / "summary.txt")
    write_csv(gate_report_frame(report), Path(out_dir) / "gate_report.csv")
    write_meta(Path(out_dir), "run", config_path, time.time() - start)


@cli.command()
@run_options
def sweep(config_path: str | None, out_dir: str, tier: str | None, n: int | None, theta: str | None, verbose: bool) -> None:
    """Evaluates every point of the configured sweep grid into sweep.csv."""
    start = time.time()
    config = load_run_config(config_path, tier, n, theta, verbose)
    try:
        frame = run_sweep(config, logger=logging.getLogger("sweep"))
    except ValueError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)

    write_csv(frame, Path(out_dir) / "sweep.csv")
    write_meta(Path(out_dir), "sweep", config_path, time.time() - start)
    click.echo(f"Wrote {len(frame)} rows to {Path(out_dir) / 'sweep.csv'}")


@cli.command()
@run_options
def timing(config_path: str | None, out_dir: str, tier: str | None, n: int | None, theta: str | None, verbose: bool) -> None:
    """Operation time breakdown, coherence margins and the step-count comparison."""
    start = time.time()
    config = load_run_config(config_path, tier, n, theta, verbose)
    try:
        summary = timing_summary(config.n, device_params(config))
    except ValueError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    click.echo(summary)
    write_text(summary, Path(out_dir) / "summary.txt")
    write_meta(Path(out_dir), "timing", config_path, time.time() - start)


if __name__ == '__main__':
    cli()
