"""Transfer-matrix propagation between arbitrary lattice sites."""

import logging
import math

import numpy as np

from lattice.weights import crossing_factor, step_factor
from utils.data_types import LatticeSpec, ModelKind, Query, WeightModel
from utils.exceptions import DomainError, TruncationError
from utils.logger import create_span

logger = logging.getLogger(__name__)

# Sites must sit within this relative distance of an integer multiple of eta.
_SITE_RTOL = 1e-9


def step_weights(model: WeightModel, spec: LatticeSpec, cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-site weights of an up step and a down step on sites -cutoff..cutoff.

    Each step carries 1/2 times the potential factor: e^{-V eps} when the
    lower endpoint of the step is negative, e^{-a m eta} when the step
    traverses the 0/-1 cell.
    """
    sites = np.arange(-cutoff, cutoff + 1)
    up = np.full(sites.shape, 0.5)
    down = np.full(sites.shape, 0.5)

    if model.kind is ModelKind.STEP and model.step_height != 0:
        factor = step_factor(model, spec)
        up[sites < 0] *= factor
        down[sites <= 0] *= factor

    if model.kind is ModelKind.DELTA and model.coupling != 0:
        factor = crossing_factor(model, spec)
        up[sites == -1] *= factor
        down[sites == 0] *= factor

    return up, down


def transfer_matrix_density(n: int, x0_site: int, x1_site: int, model: WeightModel,
                            spec: LatticeSpec, cutoff: int) -> float:
    """Weighted sum over 2n-step paths from site x0 to site x1.

    The state vector is propagated one step at a time; paths reaching the
    cutoff are dropped, which is exact when cutoff >= n + max(|x0|, |x1|).

    Raises:
        TruncationError: If the cutoff could drop a contributing path.
    """
    if n != spec.n:
        raise DomainError("n does not match the lattice spec", f"n = {n}, spec.n = {spec.n}")

    required = n + max(abs(x0_site), abs(x1_site))
    if cutoff < required:
        raise TruncationError(
            f"Cutoff {cutoff} would truncate the lattice sum",
            f"need cutoff >= n + max(|x0|, |x1|) = {required}",
        )

    up, down = step_weights(model, spec, cutoff)
    state = np.zeros(2 * cutoff + 1)
    state[x0_site + cutoff] = 1.0

    with create_span("lattice.transfer_matrix", n=n, cutoff=cutoff, model=str(model)):
        for _ in range(2 * n):
            moved = np.zeros_like(state)
            moved[1:] += (state * up)[:-1]
            moved[:-1] += (state * down)[1:]
            state = moved

    return float(state[x1_site + cutoff])


def site_for(x: float, spec: LatticeSpec) -> int:
    """Lattice site at position x.

    Raises:
        DomainError: If x is not an integer multiple of eta.
    """
    ratio = x / spec.eta
    site = round(ratio)
    if not math.isclose(ratio, site, rel_tol=_SITE_RTOL, abs_tol=_SITE_RTOL):
        raise DomainError(
            f"Position {x} does not fall on a lattice site",
            f"x / eta = {ratio}; choose n so that endpoints are multiples of eta",
        )
    return site


def oracle_sizes(query: Query, unit: float = 1.0, levels: int = 3, base: int = 20) -> list[int]:
    """Step counts n for which the endpoints of the query sit on lattice sites.

    Spacings are eta = unit / j with j = base * 2**i, so any endpoint that is a
    multiple of unit lands on a site. n = T j^2 / (2 m unit^2) must be an
    integer.

    Raises:
        DomainError: If the endpoints are not multiples of unit or no
            integer n exists for the requested j.
    """
    for x in (query.x0, query.x1):
        if not math.isclose(x / unit, round(x / unit), abs_tol=_SITE_RTOL):
            raise DomainError(f"Endpoint {x} is not a multiple of unit {unit}")

    scale = query.total_time / (2 * query.mass * unit ** 2)
    sizes = []
    for level in range(levels):
        j = base * 2 ** level
        n = scale * j * j
        if not math.isclose(n, round(n), rel_tol=1e-12) or round(n) < 1:
            raise DomainError(
                f"No integer step count for eta = {unit}/{j}",
                f"T j^2 / (2 m unit^2) = {n}; pick unit or base so this is an integer",
            )
        sizes.append(round(n))
    return sizes


def lattice_oracle_density(query: Query, model: WeightModel, n: int) -> float:
    """Transfer-matrix u / (2 eta) at the query endpoints with 2n steps spanning T."""
    spec = LatticeSpec.from_total_time(n, query.mass, query.total_time)
    x0_site = site_for(query.x0, spec)
    x1_site = site_for(query.x1, spec)

    if (x1_site - x0_site) % 2:
        raise DomainError("Endpoint sites have odd separation; no 2n-step path connects them")

    cutoff = n + max(abs(x0_site), abs(x1_site))
    u = transfer_matrix_density(n, x0_site, x1_site, model, spec, cutoff)
    logger.debug(f"Lattice oracle n = {n}, sites ({x0_site}, {x1_site}), u = {u}")
    return u / (2 * spec.eta)
