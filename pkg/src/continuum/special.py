"""Exponentially weighted tail integrals of the free kernel.

Both routes compute

    I(c, tau) = int_0^inf exp(-a m u) gbar_f(c + u, tau | 0, 0) du

for complex Euclidean time tau with Re tau >= 0 (tau = iT is real time).
"""

import cmath
import math

from scipy import integrate, special

from utils.exceptions import QuadratureError

# Above this |z| (with Re z > 0) 1 - sqrt(pi) z erfcx(z) comes from its asymptotic series.
ASYMPTOTIC_THRESHOLD = 8.0
ASYMPTOTIC_TERMS = 40


def free_kernel(x: complex, tau: complex, mass: float) -> complex:
    """gbar_f(x, tau | 0, 0) = (m / 2 pi tau)^{1/2} exp(-m x^2 / 2 tau), principal branch."""
    tau = complex(tau)
    return cmath.sqrt(mass / (2 * math.pi * tau)) * cmath.exp(-mass * x * x / (2 * tau))


def free_tail_integral(c: float, tau: complex, a: float, mass: float) -> complex:
    """Closed form (1/2) exp(-m c^2 / 2 tau) erfcx(a (m tau / 2)^{1/2} + c (m / 2 tau)^{1/2}).

    Completing the square in the Gaussian exponent turns the integral into a
    complementary error function; the scaled form keeps the large-argument
    cancellation out of floating point.
    """
    tau = complex(tau)
    argument = a * cmath.sqrt(mass * tau / 2) + c * cmath.sqrt(mass / (2 * tau))
    return 0.5 * cmath.exp(-mass * c * c / (2 * tau)) * complex(special.erfcx(argument))


def free_tail_quadrature(c: float, tau: complex, a: float, mass: float,
                         abs_tol: float = 1e-14, rel_tol: float = 1e-12) -> complex:
    """Adaptive quadrature of the same integral along the ray u = exp(i arg(tau) / 2) s.

    On that ray (c + u)^2 / tau has a positive real quadratic part, so the
    integrand decays like a Gaussian instead of oscillating. Rotating the
    contour is valid for 0 <= arg(tau) <= pi/2; in real time with a < 0 the
    rotated integral is the definition.

    Raises:
        QuadratureError: If either part fails to converge.
    """
    tau = complex(tau)
    direction = cmath.exp(0.5j * cmath.phase(tau))

    def integrand(s: float) -> complex:
        u = direction * s
        return cmath.exp(-a * mass * u) * free_kernel(c + u, tau, mass)

    parts = []
    for part in (lambda s: integrand(s).real, lambda s: integrand(s).imag):
        result = integrate.quad(part, 0.0, math.inf, epsabs=abs_tol, epsrel=rel_tol, limit=200, full_output=1)
        if len(result) > 3:
            raise QuadratureError(
                "Tail integral did not converge",
                achieved_error=result[1],
                panels=result[2].get("last"),
                details=result[3],
            )
        parts.append(result[0])

    return direction * complex(parts[0], parts[1])


def erfcx_complement(z: complex) -> complex:
    """1 - sqrt(pi) z erfcx(z).

    For |z| >= ASYMPTOTIC_THRESHOLD with Re z > 0 the difference is summed
    from the asymptotic series 1/(2z^2) - 3/(4z^4) + 15/(8z^6) - ...
    """
    z = complex(z)
    if abs(z) < ASYMPTOTIC_THRESHOLD or z.real <= 0:
        return 1 - math.sqrt(math.pi) * z * complex(special.erfcx(z))

    inverse = 1 / (2 * z * z)
    term = complex(-1.0)
    total = complex(0.0)
    for k in range(1, ASYMPTOTIC_TERMS + 1):
        term *= -(2 * k - 1) * inverse
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def delta_reflection(c: float, tau: complex, a: float, mass: float) -> complex:
    """gbar_f(c, tau | 0, 0) - a m I(c, tau), free of cancellation for large a.

    With z_a = a (m tau / 2)^{1/2}, z_c = c (m / 2 tau)^{1/2} and z = z_a + z_c,
    a m I(c, tau) = gbar_f(c, tau | 0, 0) sqrt(pi) z_a erfcx(z), so the
    difference is gbar_f(c, tau | 0, 0) (1 - sqrt(pi) z erfcx(z) + sqrt(pi) z_c erfcx(z)).
    """
    tau = complex(tau)
    if a == 0:
        return free_kernel(c, tau, mass)
    z_c = c * cmath.sqrt(mass / (2 * tau))
    z = a * cmath.sqrt(mass * tau / 2) + z_c
    scaled = math.sqrt(math.pi) * z_c * complex(special.erfcx(z))
    return free_kernel(c, tau, mass) * (erfcx_complement(z) + scaled)
