"""Potential-dependent path weights."""

import math

from lattice.paths import boundary_crossings, time_below_steps
from utils.data_types import LatticePath, LatticeSpec, ModelKind, WeightModel
from utils.exceptions import DomainError


def step_factor(model: WeightModel, spec: LatticeSpec) -> float:
    """Weight of one step spent in x < 0 under the step model, e^{-V eps}."""
    return math.exp(-model.step_height * spec.epsilon)


def crossing_factor(model: WeightModel, spec: LatticeSpec) -> float:
    """Weight of one traversal of the 0/-1 cell under the delta model, e^{-a m eta}."""
    return math.exp(-model.coupling * spec.mass * spec.eta)


def path_weight(path: LatticePath, model: WeightModel, spec: LatticeSpec) -> float:
    """Weight of a loop under the given potential.

    Free gives 1, Step(V) gives exp(-V eps * below-time) and Delta(a) gives
    exp(-a m eta * crossings).

    Raises:
        DomainError: If the path length differs from 2n of the lattice.
    """
    if len(path) != 2 * spec.n:
        raise DomainError(
            "Path length does not match the lattice spec",
            f"path has {len(path)} steps, spec has 2n = {2 * spec.n}",
        )

    if model.kind is ModelKind.STEP:
        return step_factor(model, spec) ** time_below_steps(path)

    if model.kind is ModelKind.DELTA:
        return crossing_factor(model, spec) ** boundary_crossings(path)

    return 1.0
