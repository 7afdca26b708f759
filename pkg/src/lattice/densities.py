"""Return densities u(0, T|0, 0) by exhaustive enumeration and in closed form."""

import itertools
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from combinat import catalan, central_binomial, crossing_log_profile, log_catalan, log_central_binomial
from lattice.paths import check_enumeration_bound
from utils.config import config_manager
from utils.data_types import LatticeSpec, ModelKind, WeightModel
from utils.exceptions import DomainError
from utils.logger import create_span, log_stage

logger = logging.getLogger(__name__)

# Steps fixed per enumeration partition.
PREFIX_LENGTH = 8

_LOG_4 = math.log(4.0)


@dataclass(frozen=True)
class LoopStatistics:
    """Exhaustive histograms over all loops of 2n steps.

    Index k of ``below_time`` counts loops with below-time 2k; index l of
    ``crossings`` counts loops with 2l boundary crossings.
    """

    n: int
    below_time: np.ndarray
    crossings: np.ndarray

    @property
    def total(self) -> int:
        return int(self.below_time.sum())


def _prefix_block(n: int, prefix: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Histograms over the loops that start with the given steps."""
    below_hist = np.zeros(n + 1, dtype=np.int64)
    cross_hist = np.zeros(n + 1, dtype=np.int64)

    fixed = len(prefix)
    rest = 2 * n - fixed
    remaining_ups = n - prefix.count(1)
    if remaining_ups < 0 or remaining_ups > rest:
        return below_hist, cross_hist

    combos = np.array(list(itertools.combinations(range(rest), remaining_ups)), dtype=np.intp)
    count = combos.shape[0]

    steps = np.full((count, 2 * n), -1, dtype=np.int8)
    if fixed:
        steps[:, :fixed] = prefix
    rows = np.repeat(np.arange(count), remaining_ups)
    steps[rows, fixed + combos.ravel()] = 1

    sites = np.zeros((count, 2 * n + 1), dtype=np.int16)
    sites[:, 1:] = np.cumsum(steps, axis=1, dtype=np.int16)
    before, after = sites[:, :-1], sites[:, 1:]

    below = (np.minimum(before, after) < 0).sum(axis=1)
    crossings = ((before + after) == -1).sum(axis=1)

    below_hist += np.bincount(below // 2, minlength=n + 1)
    cross_hist += np.bincount(crossings // 2, minlength=n + 1)
    return below_hist, cross_hist


def loop_statistics(n: int, bound: Optional[int] = None, workers: Optional[int] = None) -> LoopStatistics:
    """Enumerate all loops of 2n steps and histogram their statistics.

    The loop space is partitioned by its first steps. Partitions are counted
    independently (possibly on several threads) and the integer histograms
    are added in prefix order, so the result does not depend on the worker
    count.

    Args:
        n: Half the loop length.
        bound: Enumeration bound; defaults to the configured one.
        workers: Thread count; defaults to the configured one.

    Raises:
        EnumerationBoundError: If n exceeds the bound.
    """
    check_enumeration_bound(n, bound)
    workers = config_manager.get_enumeration_workers() if workers is None else workers
    if workers < 1:
        raise DomainError("Worker count must be at least 1", f"got {workers}")

    fixed = min(2 * n, PREFIX_LENGTH)
    prefixes = [p for p in itertools.product((1, -1), repeat=fixed)
                if p.count(1) <= n and p.count(-1) <= n]

    start = time.time()
    with create_span("lattice.loop_statistics", n=n, partitions=len(prefixes), workers=workers):
        if workers == 1:
            blocks = [_prefix_block(n, prefix) for prefix in prefixes]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                blocks = list(executor.map(lambda prefix: _prefix_block(n, prefix), prefixes))

    below_hist = np.zeros(n + 1, dtype=np.int64)
    cross_hist = np.zeros(n + 1, dtype=np.int64)
    for below, cross in blocks:
        below_hist += below
        cross_hist += cross

    log_stage("lattice", f"enumerated loops for n = {n}", "completed", time.time() - start)
    return LoopStatistics(n=n, below_time=below_hist, crossings=cross_hist)


def histogram_rows(histogram: np.ndarray) -> list[tuple[int, int]]:
    """(class, count) rows, class being the even step count 2k."""
    return [(2 * k, int(count)) for k, count in enumerate(histogram)]


def _check_spec(n: int, spec: LatticeSpec) -> None:
    if n != spec.n:
        raise DomainError("n does not match the lattice spec", f"n = {n}, spec.n = {spec.n}")


def lattice_density_bruteforce(n: int, model: WeightModel, spec: LatticeSpec,
                               bound: Optional[int] = None, workers: Optional[int] = None) -> float:
    """2^{-2n} times the sum of path weights over every loop.

    Path weights depend only on the below-time (Step) or on the crossing
    count (Delta), so the sum runs over the enumerated histograms.
    """
    _check_spec(n, spec)
    stats = loop_statistics(n, bound=bound, workers=workers)

    if model.kind is ModelKind.STEP:
        histogram = stats.below_time
        log_factor = -model.step_height * spec.epsilon
    elif model.kind is ModelKind.DELTA:
        histogram = stats.crossings
        log_factor = -model.coupling * spec.mass * spec.eta
    else:
        return stats.total / 4 ** n

    total = math.fsum(int(count) * math.exp(log_factor * 2 * k) for k, count in enumerate(histogram))
    return total / 4 ** n


def free_density(n: int) -> float:
    """2^{-2n} (2n choose n)."""
    if n <= config_manager.get_exact_count_bound():
        return central_binomial(n).scaled(2 * n)
    return math.exp(log_central_binomial(n).log_value - n * _LOG_4)


def catalan_density(n: int) -> float:
    """2^{-2n} C_n."""
    if n <= config_manager.get_exact_count_bound():
        return catalan(n).scaled(2 * n)
    return math.exp(log_catalan(n).log_value - n * _LOG_4)


def lattice_density_closed(n: int, model: WeightModel, spec: LatticeSpec) -> float:
    """Closed-form return density.

    Free: 2^{-2n} (2n choose n).
    Step(V): 2^{-2n} C_n (1 - e^{-2 eps (n+1) V}) / (1 - e^{-2 eps V}), the
    geometric sum over the n + 1 equally populated below-time classes; V = 0
    gives the factor n + 1.
    Delta(a): 2^{-2n} sum_l J(n, l) e^{-2 l m a eta}, summed as
    2^{-2n} (2n choose n) sum_l exp(log J(n,l)/(2n choose n) - 2 l m a eta).
    """
    _check_spec(n, spec)

    if model.kind is ModelKind.STEP:
        x = 2 * spec.epsilon * model.step_height
        if x == 0:
            return free_density(n)
        return catalan_density(n) * (math.expm1(-x * (n + 1)) / math.expm1(-x))

    if model.kind is ModelKind.DELTA and model.coupling != 0:
        exponent = crossing_log_profile(n) - 2 * spec.mass * model.coupling * spec.eta * np.arange(n + 1)
        return free_density(n) * math.fsum(np.exp(exponent))

    return free_density(n)
