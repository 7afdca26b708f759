"""Full propagators assembled from edge propagators and restricted legs."""

import logging
from typing import Optional

from continuum.propagators import restricted_propagator
from pdx.decomposition import first_crossing_integral, first_last_integral, last_crossing_integral, pdx_first_last
from pdx.kernels import LegPotential, make_delta_edge, make_delta_kernel, make_step_edge
from utils.data_types import PropagatorValue, QuadratureResult, QuadratureSpec, Query, Side, TimeKind
from utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _require_euclidean(kind: TimeKind, closed_form: str) -> None:
    if kind is not TimeKind.EUCLIDEAN:
        raise DomainError("Assembly is evaluated in Euclidean time only",
                          f"use {closed_form} for real-time values")


def _with_never_crossing(q: Query, legs: LegPotential, crossing: QuadratureResult) -> QuadratureResult:
    """Add the restricted propagator of the endpoints' side, weighted by its level."""
    never_crossing = restricted_propagator(q, TimeKind.EUCLIDEAN, Side.of(q.x0)).real
    never_crossing *= legs.weight(q.x0, q.total_time)
    logger.debug(f"Same-side split for {q}: restricted {never_crossing:.12g}, crossing {crossing.value:.12g}")
    return QuadratureResult(never_crossing + crossing.value, crossing.error, crossing.panels)


def delta_full_integral(q: Query, a: float, quad: Optional[QuadratureSpec] = None) -> QuadratureResult:
    """Euclidean delta-potential propagator with its quadrature bookkeeping.

    The delta kernel is the edge propagator with its outgoing leg already
    attached, so opposite sides attach the remaining x0 leg at the last
    crossing and same-side endpoints add crossing paths, split at the first
    crossing, to the restricted propagator. An endpoint at 0 needs no leg.
    """
    kernel = make_delta_kernel(a, q.mass)
    if q.x0 == 0 or q.x1 == 0:
        other = q.x1 if q.x0 == 0 else q.x0
        return QuadratureResult(kernel(other, q.total_time), 0.0, 0)

    if q.opposite_sides:
        return last_crossing_integral(q, kernel, quad)
    return _with_never_crossing(q, LegPotential(), first_crossing_integral(q, kernel, quad))


def assemble_delta_full(q: Query, a: float, quad: Optional[QuadratureSpec] = None,
                        kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Delta-potential propagator for any signs of x0 and x1.

    Raises:
        DomainError: For real time.
        QuadratureError: If a crossing integral does not converge.
    """
    _require_euclidean(kind, "delta_full_propagator")
    return PropagatorValue(delta_full_integral(q, a, quad).value, kind)


def assemble_delta_first_last(q: Query, a: float, quad: Optional[QuadratureSpec] = None,
                              kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Opposite-side delta propagator with both legs attached to the bare edge propagator."""
    return pdx_first_last(q, make_delta_edge(a, q.mass), quad, kind)


def step_full_integral(q: Query, V: float, quad: Optional[QuadratureSpec] = None) -> QuadratureResult:
    """Euclidean step propagator (height V on x < 0) with its quadrature bookkeeping.

    Crossing paths are split at their first and last crossings, with legs
    on x < 0 weighted by exp(-V duration).
    """
    edge = make_step_edge(V, q.mass)
    legs = LegPotential(positive=0.0, negative=V)

    if q.x0 == 0 and q.x1 == 0:
        return QuadratureResult(edge(q.total_time), 0.0, 0)

    if q.x0 == 0 or q.x1 == 0:
        # The potential is static, so g(0, T | y, 0) = g(y, T | 0, 0).
        one_leg = q if q.x1 == 0 else q.swapped()
        return first_crossing_integral(one_leg, lambda x, t: edge(t), quad, legs)

    crossing = first_last_integral(q, edge, quad, legs)
    if q.opposite_sides:
        return crossing
    return _with_never_crossing(q, legs, crossing)


def assemble_step_full(q: Query, V: float, quad: Optional[QuadratureSpec] = None,
                       kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Propagator in a step of height V on x < 0, for any signs of x0 and x1.

    Raises:
        DomainError: For real time or V < 0.
        QuadratureError: If a crossing integral does not converge.
    """
    _require_euclidean(kind, "step_edge_propagator")
    return PropagatorValue(step_full_integral(q, V, quad).value, kind)
