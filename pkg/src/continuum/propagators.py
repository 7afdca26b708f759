"""Closed-form continuum propagators near x = 0.

Each formula is written once as a function of complex Euclidean time tau.
Euclidean values use tau = T; real-time values use tau = iT with principal
branches, so (i)^{1/2} = exp(i pi/4) and the real free propagator carries
the prefactor phase exp(-i pi/4).
"""

import cmath
import math

from continuum.special import delta_reflection, free_kernel
from utils.data_types import PropagatorValue, Query, Side, TimeKind
from utils.exceptions import DomainError

# Below this |V tau| the step edge factor (1 - e^{-V tau}) / (V tau) uses its series.
SERIES_THRESHOLD = 1e-8


def complex_time(T: float, kind: TimeKind) -> complex:
    """Euclidean time tau for a duration T: T itself, or iT for real time."""
    if not T > 0:
        raise DomainError("Duration must be positive", f"T = {T}")
    return complex(T) if kind is TimeKind.EUCLIDEAN else complex(0.0, T)


def _expm1(z: complex) -> complex:
    """exp(z) - 1 without cancellation for small |z|."""
    if z.imag == 0:
        return complex(math.expm1(z.real))
    half_sin = math.sin(z.imag / 2)
    return complex(math.expm1(z.real) * math.cos(z.imag) - 2 * half_sin * half_sin,
                   math.exp(z.real) * math.sin(z.imag))


def relaxation_factor(z: complex) -> complex:
    """(1 - e^{-z}) / z, equal to 1 at z = 0."""
    if abs(z) < SERIES_THRESHOLD:
        return 1 - z / 2 + z * z / 6
    return -_expm1(-z) / z


def free_propagator(q: Query, kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Free propagator g_f(x1, T | x0, 0)."""
    tau = complex_time(q.total_time, kind)
    return PropagatorValue(free_kernel(q.x1 - q.x0, tau, q.mass), kind)


def restricted_propagator(q: Query, kind: TimeKind = TimeKind.EUCLIDEAN,
                          side: Side = Side.POSITIVE) -> PropagatorValue:
    """Method-of-images propagator on one half line.

    g_f(x1 - x0) - g_f(x1 + x0) when both endpoints lie strictly inside the
    side, zero otherwise.
    """
    if not (side.contains(q.x0) and side.contains(q.x1)):
        return PropagatorValue(0j, kind)

    tau = complex_time(q.total_time, kind)
    direct = free_kernel(q.x1 - q.x0, tau, q.mass)
    image = free_kernel(q.x1 + q.x0, tau, q.mass)
    return PropagatorValue(direct - image, kind)


def boundary_derivative(q: Query, kind: TimeKind = TimeKind.EUCLIDEAN,
                        side: Side = Side.POSITIVE) -> PropagatorValue:
    """Derivative of the restricted propagator in its endpoint at x = 0.

    Exactly one endpoint of the query must be 0; with y the other one the
    derivative is 2 (m y / tau) gbar_f(y, tau | 0, 0), the same expression
    for either side. It is zero when y is not on the given side.

    Raises:
        DomainError: If neither or both endpoints are at 0.
    """
    if q.x0 == 0 and q.x1 == 0:
        raise DomainError(
            "Boundary derivative needs one endpoint off x = 0",
            "both endpoints are 0; the limit is distributional",
        )
    if q.x0 != 0 and q.x1 != 0:
        raise DomainError("Boundary derivative needs one endpoint at x = 0", f"x0 = {q.x0}, x1 = {q.x1}")

    other = q.x1 if q.x0 == 0 else q.x0
    if not side.contains(other):
        return PropagatorValue(0j, kind)

    tau = complex_time(q.total_time, kind)
    return PropagatorValue(2 * q.mass * other / tau * free_kernel(other, tau, q.mass), kind)


def first_crossing_density(t: float, x0: float, mass: float) -> float:
    """Euclidean first-passage density at x = 0 from x0: |x0| / t * gbar_f(x0, t | 0, 0).

    This is (1 / 2m) |d gbar_r / dx| at the boundary, the inverse-Gaussian
    law of Brownian hitting times. Zero for t <= 0.
    """
    if t <= 0:
        return 0.0
    return abs(x0) / t * math.sqrt(mass / (2 * math.pi * t)) * math.exp(-mass * x0 * x0 / (2 * t))


def step_edge_propagator(T: float, V: float, m: float,
                         kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Propagator from 0 to 0 along the edge of a step of height V on x < 0.

    (m / 2 pi)^{1/2} (1 - e^{-V tau}) / (V tau^{3/2}); V = 0 gives the free
    value (m / 2 pi tau)^{1/2}.
    """
    if V < 0:
        raise DomainError("Step height V must be nonnegative", f"V = {V}")
    tau = complex_time(T, kind)
    value = cmath.sqrt(m / (2 * math.pi * tau)) * relaxation_factor(V * tau)
    return PropagatorValue(value, kind)


def step_edge_kernel(tau: complex, V: float, m: float) -> complex:
    """Step edge propagator at a raw Euclidean time tau (no validation)."""
    return cmath.sqrt(m / (2 * math.pi * complex(tau))) * relaxation_factor(V * complex(tau))


def delta_edge_propagator(T: float, a: float, m: float,
                          kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Propagator from 0 to 0 through a delta potential a delta(x).

    gbar_f(0, tau | 0, 0) - a m int_0^inf e^{-a m u} gbar_f(u, tau | 0, 0) du,
    with the tail integral in closed form.
    """
    tau = complex_time(T, kind)
    value = delta_reflection(0.0, tau, a, m)
    return PropagatorValue(value, kind)


def delta_full_propagator(q: Query, a: float, kind: TimeKind = TimeKind.EUCLIDEAN) -> PropagatorValue:
    """Full propagator through a delta potential, valid for every sign of x0 and x1.

    g_f(x1, T | x0, 0) - a m int_0^inf e^{-a m u} g_f(|x1| + |x0| + u, T | 0, 0) du.
    """
    tau = complex_time(q.total_time, kind)
    c = abs(q.x0) + abs(q.x1)
    # Zero for endpoints on opposite sides; the restricted part otherwise.
    unreflected = free_kernel(q.x1 - q.x0, tau, q.mass) - free_kernel(c, tau, q.mass)
    return PropagatorValue(unreflected + delta_reflection(c, tau, a, q.mass), kind)
