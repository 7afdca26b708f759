"""Toolkit subcommands and the command line entry point."""

import logging
import math
import sys
import time
from typing import Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from cli.arguments import parse_arguments
from cli.models import CommandName, RunConfig
from cli.output import emit, render_table
from combinat import catalan, catalan_asymptotic, central_binomial, crossing_partition_count
from continuum import (
    check_slope,
    continuum_extrapolate,
    continuum_sweep,
    continuum_target,
    convergence_slope,
    default_exponents,
)
from lattice import (
    histogram_rows,
    lattice_density_bruteforce,
    lattice_density_closed,
    loop_statistics,
    transfer_matrix_density,
)
from pdx import (
    VerificationReport,
    verify_delta_assembly,
    verify_free_first_last,
    verify_free_identity,
    verify_step_free_limit,
    verify_step_lattice_oracle,
)
from utils.config import config_manager
from utils.data_types import LatticeSpec, Query
from utils.exceptions import (
    ConfigurationError,
    DomainError,
    EnumerationBoundError,
    PropagatorError,
    ToleranceViolationError,
    UsageError,
)
from utils.logger import log_stage, setup_logging

logger = logging.getLogger(__name__)

# Largest n for the O(n^2) transfer-matrix column of the density table.
TRANSFER_MATRIX_BOUND = 2000

_LOG_FLOAT_MAX = math.log(sys.float_info.max)


def _agrees(value: Optional[float], reference: float, tolerance: float) -> Optional[bool]:
    if value is None:
        return None
    return math.isclose(value, reference, rel_tol=tolerance, abs_tol=0.0)


def cmd_count(config: RunConfig) -> pd.DataFrame:
    """Catalan and central binomial counts over an inclusive n range, exact values as decimal strings."""
    start, stop = config.n_range or (0, 10)
    rows = []
    for n in range(start, stop + 1):
        exact = catalan(n)
        if n >= 1:
            approx = catalan_asymptotic(n)
            asymptotic = approx.to_float() if approx.log_value < _LOG_FLOAT_MAX else None
            error = approx.relative_error(exact)
        else:
            asymptotic, error = None, None
        rows.append({
            "n": n,
            "catalan": str(exact.value),
            "central_binomial": str(central_binomial(n).value),
            "catalan_asymptotic": asymptotic,
            "relative_error": error,
        })
    columns = ["n", "catalan", "central_binomial", "catalan_asymptotic", "relative_error"]
    return pd.DataFrame(rows, columns=columns)


def cmd_density(config: RunConfig) -> pd.DataFrame:
    """Closed-form, enumerated and transfer-matrix return densities along an n sweep.

    Columns the run cannot afford (enumeration above the bound, transfer
    matrix above TRANSFER_MATRIX_BOUND) are left empty.
    """
    model = config.weight_model()
    total_time = config.total_times[0]
    tolerance = config.tolerance or 1e-12
    bound = config_manager.get_enumeration_bound()

    rows = []
    for n in config.ns:
        if n < 1:
            raise UsageError("Density needs n >= 1", f"got n = {n}")
        spec = LatticeSpec.from_total_time(n, config.mass, total_time)
        closed = lattice_density_closed(n, model, spec)
        brute = lattice_density_bruteforce(n, model, spec) if n <= bound else None
        transfer = transfer_matrix_density(n, 0, 0, model, spec, n) if n <= TRANSFER_MATRIX_BOUND else None
        rows.append({
            "n": n,
            "eta": spec.eta,
            "closed_form": closed,
            "bruteforce": brute,
            "transfer_matrix": transfer,
            "bruteforce_agrees": _agrees(brute, closed, tolerance),
            "transfer_agrees": _agrees(transfer, closed, tolerance),
        })
    columns = ["n", "eta", "closed_form", "bruteforce", "transfer_matrix", "bruteforce_agrees", "transfer_agrees"]
    return pd.DataFrame(rows, columns=columns)


def cmd_histogram(config: RunConfig) -> tuple[pd.DataFrame, bool]:
    """Exhaustive below-time and crossing histograms as (class, count) blocks per n and statistic.

    Returns:
        The table and whether every count equals its exact value (C_n for
        below-time classes, J(n, l) for crossing classes).
    """
    rows = []
    ok = True
    for n in config.ns:
        stats = loop_statistics(n)
        blocks = (
            ("below_time", stats.below_time, lambda k: catalan(n).value),
            ("crossings", stats.crossings, lambda l: crossing_partition_count(n, l).value),
        )
        for statistic, histogram, exact in blocks:
            for cls, count in histogram_rows(histogram):
                if count != exact(cls // 2):
                    logger.warning(f"{statistic} class {cls} at n = {n}: {count} loops, expected {exact(cls // 2)}")
                    ok = False
                rows.append({"n": n, "statistic": statistic, "class": cls, "count": count})
    return pd.DataFrame(rows, columns=["n", "statistic", "class", "count"]), ok


def cmd_converge(config: RunConfig) -> tuple[pd.DataFrame, bool]:
    """u / 2 eta along an n sweep with its closed-form target, extrapolated limit and slope.

    Returns:
        The table and whether the fitted slope matches the model's order.

    Raises:
        UsageError: If the sweep has fewer than two points.
    """
    if len(config.ns) < 2:
        raise UsageError("Convergence needs at least 2 sweep points", f"got n = {config.ns}")

    model = config.weight_model()
    total_time = config.total_times[0]
    ns = sorted(config.ns)
    target = continuum_target(model, config.mass, total_time)

    samples = continuum_sweep(model, ns, config.mass, total_time)
    pairs = [(s.n, s.value) for s in samples]
    slope = convergence_slope(pairs, target)
    limit = continuum_extrapolate(pairs, default_exponents(model, len(pairs) - 1))
    slope_ok = check_slope(slope, model, config.tolerance or 0.2)

    rows = [{"row": "sample", "n": s.n, "value": s.value, "target": target,
             "relative_error": s.relative_error, "error_estimate": None, "slope": slope} for s in samples]
    rows.append({"row": "extrapolated", "n": None, "value": limit.estimate, "target": target,
                 "relative_error": (limit.estimate - target) / target, "error_estimate": limit.error_estimate,
                 "slope": slope})
    columns = ["row", "n", "value", "target", "relative_error", "error_estimate", "slope"]
    return pd.DataFrame(rows, columns=columns), slope_ok


def grid_queries(config: RunConfig) -> list[Query]:
    """x0 by T grid with x1 = -x0 unless a fixed x1 is configured.

    Raises:
        UsageError: If the grid is empty.
    """
    if not config.x0 or not config.total_times:
        raise UsageError("Empty query grid", "give at least one --x0 and one --T")
    return [Query(x0, -x0 if config.x1 is None else config.x1, T, config.mass)
            for x0 in config.x0 for T in config.total_times]


def sign_cases(queries: Sequence[Query]) -> list[Query]:
    """Every sign combination of each query's endpoint magnitudes."""
    return [Query(s0 * abs(q.x0), s1 * abs(q.x1), q.total_time, q.mass)
            for q in queries for s0 in (1.0, -1.0) for s1 in (1.0, -1.0)]


def cmd_pdx_verify(config: RunConfig) -> VerificationReport:
    """Free identities, delta assembly in every sign case and the flat-step limit over the query grid."""
    queries = grid_queries(config)
    quad = config.quadrature()
    tol = config.tolerance

    start = time.time()
    report = verify_free_identity(queries, quad, tol or 1e-8)
    report = report.extend(verify_free_first_last(queries, quad, tol or 1e-6))
    report = report.extend(verify_delta_assembly(sign_cases(queries), config.a, quad, tol or 1e-6))
    report = report.extend(verify_step_free_limit(queries, quad, tol or 1e-6))
    if config.lattice_oracle:
        report = report.extend(verify_step_lattice_oracle(queries, config.V, quad, config.unit, tol or 0.02))
    log_stage("pdx", f"verified {len(report.entries)} entries", "completed", time.time() - start)
    return report


def _worst_offender(report: VerificationReport) -> str:
    failures = report.failures()
    worst = max(failures, key=lambda e: math.inf if e.relative_deviation is None else e.relative_deviation)
    deviation = "n/a" if worst.relative_deviation is None else f"{worst.relative_deviation:.3e}"
    note = f" ({worst.note})" if worst.note else ""
    return (f"{len(failures)} check(s) failed; worst: {worst.check} at x0 = {worst.x0}, x1 = {worst.x1}, "
            f"T = {worst.total_time}, deviation {deviation} > {worst.tolerance:g}{note}")


def run_command(config: RunConfig) -> int:
    """Run one configured command and emit its output.

    Output is written before any check failure is raised, so failing runs
    still leave their table or report behind.

    Returns:
        0 on success.

    Raises:
        ToleranceViolationError: If a tolerance or agreement check fails.
    """
    logger.info(f"Running {config.command.value}")

    if config.command is CommandName.PDX_VERIFY:
        report = cmd_pdx_verify(config)
        emit(report.to_json(), config)
        if not report.passed:
            raise ToleranceViolationError("pdx-verify found deviations above tolerance", _worst_offender(report))
        return 0

    ok = True
    if config.command is CommandName.COUNT:
        table = cmd_count(config)
    elif config.command is CommandName.DENSITY:
        table = cmd_density(config)
        ok = not (table["bruteforce_agrees"].eq(False).any() or table["transfer_agrees"].eq(False).any())
    elif config.command is CommandName.HISTOGRAM:
        table, ok = cmd_histogram(config)
    else:
        table, ok = cmd_converge(config)

    emit(render_table(table, config.format), config)
    if not ok:
        raise ToleranceViolationError(f"{config.command.value}: agreement check failed")
    return 0


def _validate_environment() -> None:
    validation_result = config_manager.validate_configuration()
    if not validation_result.is_valid:
        logger.error(f"Configuration validation failed: {validation_result.error_message}")
        raise ConfigurationError(validation_result.error_message, "; ".join(validation_result.error_details))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command line entry point.

    Returns:
        Exit code: 0 success, 1 tolerance or quadrature failure, 2 usage error.
    """
    args = parse_arguments(argv)
    setup_logging(args.debug)

    try:
        _validate_environment()
        config = RunConfig.from_args(args)
        return run_command(config)
    except (UsageError, EnumerationBoundError, DomainError, ConfigurationError) as e:
        print(f"Usage error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"Usage error: {e}", file=sys.stderr)
        return 2
    except PropagatorError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
