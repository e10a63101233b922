"""
Gehring-Hayman Verifier CLI
Constants, verification suites, parameter sweeps, ray ratios of user supplied
measures and sharpness tables

Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
3 numerical failure.
"""
import json
import math
import os
import sys
import logging
from functools import wraps
from pathlib import Path
from typing import List, Literal, Optional

import click
import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, ValidationError, field_validator

from errors import DomainError, HallError
from grid_runner import GridRunner, get_grid_runner
from hall import G1_closed, G_gamma, sharpness_table, upper_bound_U
from hall_config import configure_logging
from measure_io import load_measure_file
from specfun import OrderAlpha, hall_constant, hall_crude_bound
from starlike import eval_map, gh_ratio
from verify_jobs import SUITES, interior_grid, pair_matrix, run_suite

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1

FLOAT_FORMAT = "%.15g"
SWEEP_COLUMNS = {
    "main": ["alpha", "s", "t", "I_sum", "bound", "margin"],
    "lemma5": ["alpha", "a", "U", "G_gamma_at_1"],
    "g1": ["a", "G1"],
}


class SweepSpec(BaseModel):
    """Parameters of a sweep run"""

    what: Literal["main", "lemma5", "g1"] = "main"
    alphas: List[float] = Field(min_length=1)
    grid: int = Field(ge=2)
    tol: float = Field(gt=0.0)
    out: Path
    output_format: Literal["csv", "json"] = "csv"

    @field_validator("alphas")
    @classmethod
    def check_alphas(cls, alphas: List[float]) -> List[float]:
        for alpha in alphas:
            if not (0.0 <= alpha < 1.0):
                raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
        return alphas


def handle_errors(func):
    """Turn package errors into a message on stderr and their exit code"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except HallError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def _fmt(value: float) -> str:
    return FLOAT_FORMAT % value


def _check_writable(path: Path) -> None:
    parent = path.resolve().parent
    if not parent.is_dir() or not os.access(parent, os.W_OK) or path.is_dir():
        raise DomainError(f"cannot write output to {path}")


@click.group()
@click.option("--log-level", default=None, help="Logging level (default HALLGH_LOG_LEVEL or INFO)")
def cli(log_level: Optional[str]):
    """Numerical verification of the sharp Gehring-Hayman constant for starlike maps of order alpha"""
    configure_logging(log_level)


@cli.command()
@click.option("--alpha", type=float, required=True, help="Order alpha in [0, 1)")
@handle_errors
def constant(alpha: float):
    """Print beta(alpha), the crude bound 1 + (1-alpha)(log 4)^alpha and their gap"""
    order = OrderAlpha(alpha)
    beta = hall_constant(order)
    crude = hall_crude_bound(order)
    click.echo(f"alpha  {_fmt(order.alpha)}")
    click.echo(f"beta   {_fmt(beta)}")
    click.echo(f"crude  {_fmt(crude)}")
    click.echo(f"gap    {_fmt(crude - beta)}")


@cli.command()
@click.option("--suite", type=click.Choice(list(SUITES) + ["all"]), required=True, help="Suite to run")
@click.option("--alpha", type=float, default=None, help="Restrict order-dependent suites to one alpha")
@click.option("--grid", type=int, default=None, help="Grid size per axis (suite default if omitted)")
@click.option("--tol", type=float, default=None, help="Allowed negative margin (suite default if omitted)")
@click.option("--quad-tol", type=float, default=None, help="Quadrature tolerance")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write the JSON report here")
@click.option("--seed", type=int, default=None, help="Master seed for the random maps (required by theorem, optional for lemma1)")
@click.option("--maps", "n_maps", type=int, default=None, help="Random maps per alpha for the theorem and lemma1 suites")
@click.option("--workers", type=int, default=None, help="Worker processes for grid cells")
@handle_errors
def verify(suite, alpha, grid, tol, quad_tol, out, seed, n_maps, workers):
    """Run verification suites and emit JSON reports; exit 0 when every margin is within tolerance"""
    if out is not None:
        _check_writable(out)
    reports = run_suite(suite, alpha, grid, tol, quad_tol, seed, n_maps, get_grid_runner(workers))

    payload = [json.loads(r.model_dump_json()) for r in reports]
    text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    if out is not None:
        out.write_text(text + "\n", encoding="utf-8")
        logger.info(f"📄 Report written to {out}")
    else:
        click.echo(text)

    for report in reports:
        click.echo(report.summary(), err=True)
    passed = all(r.passed for r in reports)
    sys.exit(EXIT_PASS if passed else EXIT_FAIL)


def build_sweep_table(spec: SweepSpec, runner: Optional[GridRunner] = None) -> pd.DataFrame:
    """
    Rows of a sweep in row-major grid order

    main: every (s_i, s_j) of the interior grid of (0, π) with the summed
    integrand, the bound 2(β-1) and their margin. lemma5: a log-spaced over
    [1e-2, 1e2] with U(a, γ) and G_gamma(1, γ). g1: the (a, G₁(a)) curve on the
    interior grid of (0, 1); alphas are ignored.
    """
    runner = runner or get_grid_runner()
    rows = []
    if spec.what == "g1":
        for a in interior_grid(spec.grid, 1.0):
            rows.append((float(a), G1_closed(float(a))))
        return pd.DataFrame(rows, columns=SWEEP_COLUMNS["g1"])

    for alpha in spec.alphas:
        order = OrderAlpha(alpha)
        if spec.what == "main":
            bound = 2.0 * (hall_constant(order) - 1.0)
            s = interior_grid(spec.grid, math.pi)
            matrix = pair_matrix(order, s, spec.tol, runner, label="sweep")
            sums = matrix + matrix.T
            for i in range(spec.grid):
                for j in range(spec.grid):
                    total = float(sums[i, j])
                    rows.append((order.alpha, float(s[i]), float(s[j]), total, bound, bound - total))
        else:
            gamma = order.gamma_param
            peak = G_gamma(1.0, gamma, spec.tol, spec.tol)
            for a in np.logspace(-2.0, 2.0, spec.grid):
                rows.append((order.alpha, float(a), upper_bound_U(float(a), gamma, spec.tol, spec.tol), peak))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS[spec.what])


def write_sweep_table(df: pd.DataFrame, spec: SweepSpec) -> None:
    try:
        if spec.output_format == "csv":
            df.to_csv(spec.out, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        else:
            df.to_json(spec.out, orient="records", double_precision=15, indent=2)
    except OSError as e:
        raise DomainError(f"cannot write output to {spec.out}: {e}") from e


@cli.command()
@click.option("--what", type=click.Choice(["main", "lemma5", "g1"]), default="main", help="Quantity to sweep")
@click.option("--alpha", "alphas", type=float, multiple=True, help="Order alpha (repeatable, default 0)")
@click.option("--grid", type=int, default=10, help="Grid size per axis")
@click.option("--tol", type=float, default=1e-10, help="Quadrature tolerance")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Output file")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default="csv", help="Output format")
@click.option("--workers", type=int, default=None, help="Worker processes for grid cells")
@handle_errors
def sweep(what, alphas, grid, tol, out, output_format, workers):
    """Sweep a quantity over a grid and write a CSV or JSON table"""
    try:
        spec = SweepSpec(
            what=what, alphas=list(alphas) or [0.0], grid=grid, tol=tol, out=out, output_format=output_format
        )
    except ValidationError as e:
        raise DomainError(f"invalid sweep parameters: {e.errors()[0]['msg']}") from e

    _check_writable(spec.out)
    logger.info(f"🚀 Sweep {spec.what} for alpha={spec.alphas} grid={spec.grid}")
    df = build_sweep_table(spec, get_grid_runner(workers))
    write_sweep_table(df, spec)
    logger.info(f"✅ Wrote {len(df)} rows to {spec.out}")


@cli.command()
@click.argument("measure_file", type=click.Path(path_type=Path))
@click.option("--r", "radius", type=float, required=True, help="Radius in (0, 1)")
@click.option("--theta", type=float, default=0.0, help="Ray direction")
@handle_errors
def ratio(measure_file, radius, theta):
    """Ray length, image modulus and Gehring-Hayman ratio for a measure document"""
    m = load_measure_file(measure_file)
    value = gh_ratio(m, radius, theta)
    modulus = abs(eval_map(m, radius * complex(math.cos(theta), math.sin(theta))))
    length = value * modulus
    beta = hall_constant(m.order)
    click.echo(f"length   {_fmt(length)}")
    click.echo(f"modulus  {_fmt(modulus)}")
    click.echo(f"ratio    {_fmt(value)}")
    click.echo(f"beta     {_fmt(beta)}")
    click.echo(f"slack    {_fmt(beta - value)}")


@cli.command()
@click.option("--alpha", type=float, required=True, help="Order alpha in [0, 1)")
@click.option("--t-min", type=float, default=1e-6, help="Smallest T = 2(1 - cos theta), in (0, 1]")
@click.option("--steps-per-decade", type=int, default=1, help="T values per decade")
@click.option("--tol", type=float, default=1e-10, help="Quadrature tolerance")
@handle_errors
def sharpness(alpha, t_min, steps_per_decade, tol):
    """Table of the limit ratio along k_alpha as T decreases, next to beta(alpha)"""
    rows = sharpness_table(alpha, t_min, steps_per_decade, tol, tol)
    click.echo(f"{'T':>12}  {'limit':>20}  {'beta':>20}")
    for row in rows:
        click.echo(f"{row.T:>12.6g}  {_fmt(row.limit):>20}  {_fmt(row.beta):>20}")


if __name__ == "__main__":
    cli()
