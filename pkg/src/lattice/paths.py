"""Loop enumeration, per-path statistics and the below-time reducing swap."""

import itertools
import logging
from typing import Iterator, Optional

from utils.config import config_manager
from utils.data_types import LatticePath
from utils.exceptions import DomainError, EnumerationBoundError

logger = logging.getLogger(__name__)


def check_enumeration_bound(n: int, bound: Optional[int] = None) -> None:
    """Refuse exhaustive work above the enumeration bound.

    Raises:
        EnumerationBoundError: If n exceeds the bound.
    """
    if n < 0:
        raise DomainError("n must be nonnegative", f"got {n}")

    limit = config_manager.get_enumeration_bound() if bound is None else bound
    if n > limit:
        raise EnumerationBoundError(
            f"Refusing to enumerate loops with n = {n}: bound is {limit}",
            f"{2 ** (2 * n)} step sequences; raise PROPAGATOR_ENUMERATION_BOUND or pass bound explicitly",
        )


def enumerate_loops(n: int, bound: Optional[int] = None) -> Iterator[LatticePath]:
    """Stream every loop of 2n steps exactly once.

    Loops are generated by choosing the positions of the n up steps, in
    lexicographic order. The bound is checked before the stream is returned.
    """
    check_enumeration_bound(n, bound)
    return _generate_loops(n)


def _generate_loops(n: int) -> Iterator[LatticePath]:
    for ups in itertools.combinations(range(2 * n), n):
        steps = [-1] * (2 * n)
        for i in ups:
            steps[i] = 1
        yield LatticePath(tuple(steps))


def time_below_steps(path: LatticePath) -> int:
    """Steps whose lower endpoint is negative."""
    sites = path.positions()
    return sum(1 for before, after in itertools.pairwise(sites) if min(before, after) < 0)


def boundary_crossings(path: LatticePath) -> int:
    """Steps traversing the cell between sites 0 and -1, in either direction."""
    sites = path.positions()
    return sum(1 for before, after in itertools.pairwise(sites) if before + after == -1)


def chung_feller_map(path: LatticePath) -> LatticePath:
    """Move one excursion below the axis so the loop spends 2 fewer steps in x < 0.

    With s the first step returning 0 after the first entry into x < 0, the
    loop A s B becomes B s A. Loops that never go below 0 are returned as is.
    """
    sites = path.positions()
    steps = path.steps

    entry = next((i for i, (before, after) in enumerate(itertools.pairwise(sites))
                  if before == 0 and after == -1), None)
    if entry is None:
        return path

    pivot = next(j for j in range(entry + 1, len(steps)) if sites[j] == -1 and sites[j + 1] == 0)

    return LatticePath(steps[pivot + 1:] + (steps[pivot],) + steps[:pivot])


def iterate_to_fixed_point(path: LatticePath) -> tuple[LatticePath, int]:
    """Apply chung_feller_map until the loop stays in x >= 0.

    Returns:
        The non-crossing loop and the number of applications.
    """
    applications = 0
    current = path
    while True:
        mapped = chung_feller_map(current)
        if mapped == current:
            return current, applications
        current = mapped
        applications += 1
