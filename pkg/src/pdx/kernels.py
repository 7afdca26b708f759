"""Time-translation invariant propagators fed to the crossing decompositions.

A Kernel K(x, t) is the Euclidean propagator from (0, 0) to (x, t); an
EdgePropagator E(t) is the same thing pinned at x = 0. Both vanish for
t <= 0 so integrands stay finite at the ends of the crossing-time range.
"""

import math
from dataclasses import dataclass
from typing import Callable

from continuum.propagators import step_edge_kernel
from continuum.special import delta_reflection
from utils.data_types import ModelKind, WeightModel
from utils.exceptions import DomainError

Kernel = Callable[[float, float], float]
EdgePropagator = Callable[[float], float]


def make_free_kernel(mass: float) -> Kernel:
    """gbar_f(x, t | 0, 0)."""
    def kernel(x: float, t: float) -> float:
        if t <= 0:
            return 0.0
        return math.sqrt(mass / (2 * math.pi * t)) * math.exp(-mass * x * x / (2 * t))

    return kernel


def make_delta_kernel(a: float, mass: float) -> Kernel:
    """Full propagator from the delta site at 0 to x.

    gbar_f(x, t) - a m int_0^inf e^{-a m u} gbar_f(|x| + u, t) du, i.e. the
    edge propagator with its outgoing leg attached through the shift and
    reflection identities of the free kernel.
    """
    free = make_free_kernel(mass)

    def kernel(x: float, t: float) -> float:
        if t <= 0:
            return 0.0
        if a == 0:
            return free(x, t)
        return delta_reflection(abs(x), t, a, mass).real

    return kernel


def make_free_edge(mass: float) -> EdgePropagator:
    """(m / 2 pi t)^{1/2}."""
    return edge_of(make_free_kernel(mass))


def make_delta_edge(a: float, mass: float) -> EdgePropagator:
    return edge_of(make_delta_kernel(a, mass))


def make_step_edge(V: float, mass: float) -> EdgePropagator:
    """Edge propagator of a step of height V on x < 0."""
    if V < 0:
        raise DomainError("Step height V must be nonnegative", f"V = {V}")

    def edge(t: float) -> float:
        if t <= 0:
            return 0.0
        return step_edge_kernel(t, V, mass).real

    return edge


def edge_of(kernel: Kernel) -> EdgePropagator:
    """Restrict a kernel to x = 0."""
    return lambda t: kernel(0.0, t)


def model_edge(model: WeightModel, mass: float) -> EdgePropagator:
    """Continuum edge propagator of a lattice weight model."""
    if model.kind is ModelKind.STEP:
        return make_step_edge(model.step_height, mass)
    if model.kind is ModelKind.DELTA:
        return make_delta_edge(model.coupling, mass)
    return make_free_edge(mass)


@dataclass(frozen=True)
class LegPotential:
    """Constant potential levels on either side of x = 0.

    A restricted leg of duration t that stays on one side picks up
    exp(-U t) with U the level on that side.
    """

    positive: float = 0.0
    negative: float = 0.0

    def level(self, x: float) -> float:
        return self.positive if x > 0 else self.negative

    def weight(self, x: float, duration: float) -> float:
        level = self.level(x)
        if level == 0:
            return 1.0
        return math.exp(-level * duration)
