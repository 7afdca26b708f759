"""Path decomposition of Euclidean propagators by crossing times of x = 0.

Paths between opposite sides cross x = 0 at least once. Splitting them at
the first crossing time t1, the last crossing time t2, or both, factors the
propagator into restricted legs joined to a propagator that starts or ends
on the boundary. In Euclidean time the restricted legs enter through the
first-passage density

    f(t; x) = (1 / 2m) |d gbar_r / dx|_{x=0} = |x| / t * gbar_f(x, t | 0, 0),

which is nonnegative and integrates to 1 over t in (0, inf).
"""

import logging
from typing import Optional

from continuum.propagators import first_crossing_density, restricted_propagator
from pdx.kernels import EdgePropagator, Kernel, LegPotential
from pdx.quadrature import integrate, integrate_triangle
from utils.data_types import PropagatorValue, QuadratureResult, QuadratureSpec, Query, Side, TimeKind
from utils.exceptions import DomainError
from utils.logger import create_span

logger = logging.getLogger(__name__)

FREE_LEGS = LegPotential()


def _require_euclidean(kind: TimeKind, operation: str) -> None:
    if kind is not TimeKind.EUCLIDEAN:
        raise DomainError(
            f"{operation} is evaluated in Euclidean time only",
            "use the closed forms in continuum for real-time values",
        )


def _require_crossing(q: Query, operation: str) -> None:
    if not q.opposite_sides:
        raise DomainError(
            f"{operation} needs endpoints on opposite sides of x = 0",
            f"x0 = {q.x0}, x1 = {q.x1}; use pdx_same_side for paths that may never cross",
        )


def _leg(t: float, x: float, mass: float, legs: LegPotential) -> float:
    """Weighted first-passage density of a leg between x and the boundary."""
    if t <= 0:
        return 0.0
    return first_crossing_density(t, x, mass) * legs.weight(x, t)


def first_crossing_integral(q: Query, kernel: Kernel, quad: Optional[QuadratureSpec] = None,
                            legs: LegPotential = FREE_LEGS) -> QuadratureResult:
    """int_0^T dt1 K(x1, T - t1) f(t1; x0), without endpoint checks."""
    T, mass = q.total_time, q.mass

    def integrand(t1: float) -> float:
        density = _leg(t1, q.x0, mass, legs)
        if density == 0.0:
            return 0.0
        return kernel(q.x1, T - t1) * density

    return integrate(integrand, 0.0, T, quad)


def last_crossing_integral(q: Query, kernel: Kernel, quad: Optional[QuadratureSpec] = None,
                           legs: LegPotential = FREE_LEGS) -> QuadratureResult:
    """int_0^T dt2 f(T - t2; x1) K(x0, t2), without endpoint checks."""
    T, mass = q.total_time, q.mass

    def integrand(t2: float) -> float:
        density = _leg(T - t2, q.x1, mass, legs)
        if density == 0.0:
            return 0.0
        return density * kernel(q.x0, t2)

    return integrate(integrand, 0.0, T, quad)


def first_last_integral(q: Query, edge: EdgePropagator, quad: Optional[QuadratureSpec] = None,
                        legs: LegPotential = FREE_LEGS) -> QuadratureResult:
    """int_0^T dt2 int_0^t2 dt1 f(T - t2; x1) E(t2 - t1) f(t1; x0), without endpoint checks."""
    T, mass = q.total_time, q.mass

    def integrand(t1: float, t2: float) -> float:
        outgoing = _leg(T - t2, q.x1, mass, legs)
        if outgoing == 0.0:
            return 0.0
        incoming = _leg(t1, q.x0, mass, legs)
        if incoming == 0.0:
            return 0.0
        return outgoing * edge(t2 - t1) * incoming

    with create_span("pdx.first_last", x0=q.x0, x1=q.x1, total_time=T):
        return integrate_triangle(integrand, T, quad)


def pdx_first_crossing(q: Query, kernel: Kernel, quad: Optional[QuadratureSpec] = None,
                       kind: TimeKind = TimeKind.EUCLIDEAN,
                       legs: LegPotential = FREE_LEGS) -> PropagatorValue:
    """Propagator split at the first crossing time t1.

    g(x1, T | x0, 0) = int_0^T dt1 g(x1, T | 0, t1) f(t1; x0), with the
    boundary-to-x1 part supplied by a time-translation invariant kernel.

    Args:
        q: Query with x0 and x1 on opposite sides of 0.
        kernel: K(x, t) = g(x, t | 0, 0) for the potential at hand.
        quad: Quadrature settings; defaults from configuration.
        kind: Must be Euclidean.
        legs: Potential levels weighting the restricted leg from x0.

    Raises:
        DomainError: For real time or endpoints not on opposite sides.
        QuadratureError: If the time integral does not converge.
    """
    _require_euclidean(kind, "pdx_first_crossing")
    _require_crossing(q, "pdx_first_crossing")
    result = first_crossing_integral(q, kernel, quad, legs)
    logger.debug(f"First-crossing integral {result.value:.12g} for {q} ({result.panels} panels)")
    return PropagatorValue(result.value, kind)


def pdx_last_crossing(q: Query, kernel: Kernel, quad: Optional[QuadratureSpec] = None,
                      kind: TimeKind = TimeKind.EUCLIDEAN,
                      legs: LegPotential = FREE_LEGS) -> PropagatorValue:
    """Propagator split at the last crossing time t2; mirror of pdx_first_crossing."""
    _require_euclidean(kind, "pdx_last_crossing")
    _require_crossing(q, "pdx_last_crossing")
    result = last_crossing_integral(q, kernel, quad, legs)
    logger.debug(f"Last-crossing integral {result.value:.12g} for {q} ({result.panels} panels)")
    return PropagatorValue(result.value, kind)


def pdx_first_last(q: Query, edge: EdgePropagator, quad: Optional[QuadratureSpec] = None,
                   kind: TimeKind = TimeKind.EUCLIDEAN,
                   legs: LegPotential = FREE_LEGS) -> PropagatorValue:
    """Propagator split at both the first and the last crossing time.

    Only the boundary-to-boundary edge propagator E(t2 - t1) is needed; the
    legs on either side are restricted free propagators weighted by legs.

    Raises:
        DomainError: For real time or endpoints not on opposite sides.
        QuadratureError: If the inner or outer integral does not converge.
    """
    _require_euclidean(kind, "pdx_first_last")
    _require_crossing(q, "pdx_first_last")
    result = first_last_integral(q, edge, quad, legs)
    logger.debug(f"First-last integral {result.value:.12g} for {q} ({result.panels} panels)")
    return PropagatorValue(result.value, kind)


def pdx_same_side(q: Query, kernel: Kernel, quad: Optional[QuadratureSpec] = None,
                  kind: TimeKind = TimeKind.EUCLIDEAN,
                  legs: LegPotential = FREE_LEGS) -> PropagatorValue:
    """Propagator between points on the same side of x = 0.

    Paths that never reach the boundary give the restricted propagator
    (weighted by the side's potential level); the rest are split at their
    first crossing exactly as in pdx_first_crossing.

    Raises:
        DomainError: For real time or endpoints not strictly on one side.
    """
    _require_euclidean(kind, "pdx_same_side")
    if not q.same_side:
        raise DomainError(
            "pdx_same_side needs both endpoints strictly on one side of x = 0",
            f"x0 = {q.x0}, x1 = {q.x1}",
        )

    side = Side.of(q.x0)
    never_crossing = restricted_propagator(q, kind, side).real * legs.weight(q.x0, q.total_time)
    crossing = first_crossing_integral(q, kernel, quad, legs)
    return PropagatorValue(never_crossing + crossing.value, kind)
