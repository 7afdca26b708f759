"""Continuum limit of lattice return densities."""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from continuum.propagators import delta_edge_propagator, free_propagator, step_edge_propagator
from lattice.densities import lattice_density_closed
from utils.data_types import ExtrapolationResult, LatticeSpec, ModelKind, Query, SweepSample, TimeKind, WeightModel
from utils.exceptions import DomainError
from utils.logger import log_sweep_progress

logger = logging.getLogger(__name__)


def default_exponents(model: WeightModel, count: int) -> tuple[float, ...]:
    """Error exponents p in value(n) = L + sum_j c_j n^{-p_j}.

    Free and Step densities converge in integer powers of 1/n. The delta
    well of width eta shifts the coupling at first order in eta, so Delta
    densities carry half-integer powers starting at n^{-1/2}.
    """
    if model.kind is ModelKind.DELTA and model.coupling != 0:
        return tuple(0.5 * (j + 1) for j in range(count))
    return tuple(float(j + 1) for j in range(count))


def _fit_limit(ns: np.ndarray, values: np.ndarray, exponents: Sequence[float]) -> float:
    columns = [np.ones_like(ns)] + [ns ** -p for p in exponents]
    matrix = np.column_stack(columns)
    coeffs = np.linalg.solve(matrix, values)
    return float(coeffs[0])


def continuum_extrapolate(samples: Sequence[tuple[int, float]],
                          exponents: Optional[Sequence[float]] = None) -> ExtrapolationResult:
    """Richardson-style extrapolation of (n, u / 2 eta) samples to n -> infinity.

    With k samples the value is fitted exactly by L + sum_{j<k} c_j n^{-p_j}.
    The error estimate is the change in L when the highest correction term
    is dropped (fit to the k - 1 largest n).

    Args:
        samples: (n, value) pairs at increasing n.
        exponents: Error exponents p_j; defaults to 1, 2, 3, ...

    Raises:
        DomainError: If fewer than two samples or n is not increasing.
    """
    if len(samples) < 2:
        raise DomainError("Extrapolation needs at least 2 samples", f"got {len(samples)}")

    ns = np.array([float(n) for n, _ in samples])
    values = np.array([float(v) for _, v in samples])
    if np.any(np.diff(ns) <= 0):
        raise DomainError("Extrapolation samples must have increasing n", f"n = {ns.tolist()}")

    count = len(samples) - 1
    if exponents is None:
        exponents = tuple(float(j + 1) for j in range(count))
    if len(exponents) < count:
        raise DomainError("Not enough error exponents for the sample count",
                          f"{len(samples)} samples need {count} exponents, got {len(exponents)}")
    exponents = tuple(exponents[:count])

    estimate = _fit_limit(ns, values, exponents)
    if count == 1:
        previous = float(values[-1])
    else:
        previous = _fit_limit(ns[1:], values[1:], exponents[:-1])

    return ExtrapolationResult(estimate=estimate, error_estimate=abs(estimate - previous), exponents=exponents)


def convergence_slope(samples: Sequence[tuple[int, float]], target: float) -> float:
    """Least-squares slope of log |relative error| against log n."""
    if len(samples) < 2:
        raise DomainError("Slope needs at least 2 samples", f"got {len(samples)}")

    log_n = np.log([float(n) for n, _ in samples])
    errors = np.array([abs(v - target) / abs(target) for _, v in samples])
    if np.any(errors == 0):
        raise DomainError("A sample equals the target exactly; slope undefined")

    slope, _ = np.polyfit(log_n, np.log(errors), 1)
    return float(slope)


def continuum_target(model: WeightModel, mass: float, total_time: float) -> float:
    """Euclidean continuum value of the 0 -> 0 propagator for the model."""
    if model.kind is ModelKind.STEP:
        return step_edge_propagator(total_time, model.step_height, mass, TimeKind.EUCLIDEAN).real
    if model.kind is ModelKind.DELTA:
        return delta_edge_propagator(total_time, model.coupling, mass, TimeKind.EUCLIDEAN).real
    return free_propagator(Query(0.0, 0.0, total_time, mass), TimeKind.EUCLIDEAN).real


def lattice_continuum_density(n: int, model: WeightModel, mass: float, total_time: float) -> float:
    """u(0, T | 0, 0) / (2 eta) with 2n steps spanning T."""
    spec = LatticeSpec.from_total_time(n, mass, total_time)
    return lattice_density_closed(n, model, spec) / (2 * spec.eta)


def continuum_sweep(model: WeightModel, ns: Sequence[int], mass: float, total_time: float) -> list[SweepSample]:
    """Lattice densities u / (2 eta) along a sweep, with relative errors against the closed form."""
    target = continuum_target(model, mass, total_time)
    samples = []
    for i, n in enumerate(ns, start=1):
        value = lattice_continuum_density(n, model, mass, total_time)
        samples.append(SweepSample(n=n, value=value, relative_error=(value - target) / target))
        log_sweep_progress(i, len(ns), f"{model} n = {n}")
    return samples


def check_slope(slope: float, model: WeightModel, tolerance: float = 0.2) -> bool:
    """Compare an observed slope with the leading error exponent of the model."""
    expected = -default_exponents(model, 1)[0]
    ok = math.isclose(slope, expected, abs_tol=tolerance)
    if not ok:
        logger.warning(f"Convergence slope {slope:.3f} for {model} differs from {expected} by more than {tolerance}")
    return ok
