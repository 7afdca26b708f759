"""Adaptive quadrature for crossing-time integrals.

Thin layer over scipy's QUADPACK wrapper: 21-point Gauss-Kronrod panels
with adaptive bisection. The crossing integrands decay like
exp(-m x^2 / 2t) / t^{3/2} at their endpoints, so an optional cubic
substitution flattens both ends before the panels are laid down.
"""

import logging
from typing import Callable, Optional

from scipy import integrate as scipy_integrate

from utils.data_types import QuadratureResult, QuadratureSpec
from utils.exceptions import QuadratureError

logger = logging.getLogger(__name__)


def _endpoint_substituted(f: Callable[[float], float], a: float, b: float) -> Callable[[float], float]:
    """f on [a, b] pulled back by t = a + (b - a)(3s^2 - 2s^3), s in [0, 1]."""
    width = b - a

    def pulled_back(s: float) -> float:
        jacobian = 6 * width * s * (1 - s)
        if jacobian == 0:
            return 0.0
        return f(a + width * s * s * (3 - 2 * s)) * jacobian

    return pulled_back


def integrate(f: Callable[[float], float], a: float, b: float,
              quad: Optional[QuadratureSpec] = None) -> QuadratureResult:
    """Integrate a real function over [a, b].

    Args:
        f: Integrand; must be finite on the open interval.
        a: Lower limit.
        b: Upper limit, b >= a.
        quad: Tolerances and panel budget; defaults from configuration.

    Returns:
        QuadratureResult with the value, QUADPACK's error estimate and the
        number of panels used.

    Raises:
        QuadratureError: If QUADPACK flags any failure, with the achieved
            error estimate and panel count attached.
    """
    quad = quad or QuadratureSpec.from_config()
    if b <= a:
        return QuadratureResult(0.0, 0.0, 0)

    if quad.endpoint_substitution:
        integrand, lower, upper = _endpoint_substituted(f, a, b), 0.0, 1.0
    else:
        integrand, lower, upper = f, a, b

    result = scipy_integrate.quad(
        integrand,
        lower,
        upper,
        epsabs=quad.abs_tol,
        epsrel=quad.rel_tol,
        limit=quad.max_subdivisions,
        full_output=1,
    )
    value, error, info = result[0], result[1], result[2]
    panels = int(info.get("last", 0))

    if len(result) > 3:
        logger.debug(f"Quadrature on [{a}, {b}] failed after {panels} panels: error {error:.3g}")
        raise QuadratureError(
            f"Quadrature on [{a}, {b}] did not reach tolerance",
            achieved_error=error,
            panels=panels,
            details=str(result[3]).strip(),
        )

    return QuadratureResult(value=value, error=error, panels=panels)


def integrate_triangle(f: Callable[[float, float], float], upper: float,
                       quad: Optional[QuadratureSpec] = None) -> QuadratureResult:
    """Integrate f(t1, t2) over 0 <= t1 <= t2 <= upper.

    The inner t1 integral runs at one tenth of the outer tolerances. Panels
    are totalled over every inner call; the error is the outer estimate.
    """
    quad = quad or QuadratureSpec.from_config()
    inner_quad = quad.inner()
    inner_panels = 0

    def outer(t2: float) -> float:
        nonlocal inner_panels
        if t2 <= 0:
            return 0.0
        inner = integrate(lambda t1: f(t1, t2), 0.0, t2, inner_quad)
        inner_panels += inner.panels
        return inner.value

    result = integrate(outer, 0.0, upper, quad)
    return QuadratureResult(value=result.value, error=result.error, panels=result.panels + inner_panels)
