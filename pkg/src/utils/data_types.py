"""Data transfer objects for the propagator toolkit."""

import math
import sys
from dataclasses import dataclass, replace
from enum import Enum
from typing import NamedTuple, Optional


# Relative slack for the lattice-spacing identities: sqrt, square and product
# each round once.
_SPACING_RTOL = 4 * sys.float_info.epsilon


class TimeKind(Enum):
    """Imaginary (Euclidean) or real time."""
    EUCLIDEAN = "euclidean"
    REAL = "real"


class Side(Enum):
    """Half line on which a restricted propagator lives."""
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @classmethod
    def of(cls, x: float) -> "Side":
        """Side of a nonzero position."""
        if x == 0:
            raise ValueError("Position 0 lies on the boundary and has no side")
        return cls.POSITIVE if x > 0 else cls.NEGATIVE

    def contains(self, x: float) -> bool:
        """Check whether x lies strictly inside this half line."""
        return x > 0 if self is Side.POSITIVE else x < 0


class ModelKind(Enum):
    """Potential used to weight lattice paths."""
    FREE = "free"
    STEP = "step"
    DELTA = "delta"


@dataclass(frozen=True)
class BigCount:
    """Exact nonnegative integer of unbounded size."""

    value: int

    def __post_init__(self):
        """Validate the count."""
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise ValueError("Count value must be an integer")

        if self.value < 0:
            raise ValueError("Count value must be nonnegative")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def to_float(self) -> float:
        """Correctly rounded float; raises OverflowError above the double range."""
        return float(self.value)

    def scaled(self, power_of_two: int) -> float:
        """Return value / 2**power_of_two, correctly rounded."""
        if power_of_two >= 0:
            return self.value / (1 << power_of_two)
        return float(self.value << -power_of_two)

    def to_log(self) -> "LogCount":
        """Log-space shadow of this count."""
        return LogCount.from_count(self)


@dataclass(frozen=True)
class LogCount:
    """Natural log of a positive count, or the zero flag."""

    log_value: float = 0.0
    is_zero: bool = False

    @classmethod
    def zero(cls) -> "LogCount":
        """The count 0."""
        return cls(log_value=-math.inf, is_zero=True)

    @classmethod
    def from_count(cls, count: "BigCount | int") -> "LogCount":
        """Exact count to log space; math.log is exact-input for big integers."""
        value = count.value if isinstance(count, BigCount) else int(count)
        if value == 0:
            return cls.zero()
        return cls(log_value=math.log(value))

    def to_float(self) -> float:
        """exp(log_value), or 0.0 for the zero flag."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_value)

    def relative_error(self, exact: BigCount) -> float:
        """Signed relative error of this log count against an exact count."""
        if exact.value == 0:
            return 0.0 if self.is_zero else math.inf
        if self.is_zero:
            return -1.0
        return math.expm1(self.log_value - math.log(exact.value))


@dataclass(frozen=True)
class LatticeSpec:
    """Discretization of a duration T into 2n steps of size epsilon = mass * eta**2."""

    n: int
    mass: float
    eta: float
    epsilon: float
    total_time: float

    def __post_init__(self):
        """Validate the spacing identities."""
        if self.n < 1:
            raise ValueError("Lattice half step count n must be positive")

        if self.mass <= 0 or self.eta <= 0 or self.epsilon <= 0 or self.total_time <= 0:
            raise ValueError("Mass, spacings and total time must be positive")

        if not math.isclose(self.epsilon, self.mass * self.eta ** 2, rel_tol=_SPACING_RTOL):
            raise ValueError("Time spacing must equal mass * eta**2")

        if not math.isclose(self.total_time, 2 * self.epsilon * self.n, rel_tol=_SPACING_RTOL):
            raise ValueError("Total time must equal 2 * epsilon * n")

    @classmethod
    def from_total_time(cls, n: int, mass: float, total_time: float) -> "LatticeSpec":
        """Spec with 2n steps spanning total_time."""
        if n < 1:
            raise ValueError("Lattice half step count n must be positive")
        epsilon = total_time / (2 * n)
        eta = math.sqrt(epsilon / mass)
        return cls(n=n, mass=mass, eta=eta, epsilon=epsilon, total_time=total_time)


@dataclass(frozen=True)
class LatticePath:
    """A loop of 2n unit steps on the integer line starting and ending at 0."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        """Validate the loop condition."""
        object.__setattr__(self, "steps", tuple(self.steps))

        if any(step not in (1, -1) for step in self.steps):
            raise ValueError("Path steps must be +1 or -1")

        if sum(self.steps) != 0:
            raise ValueError("Path must return to 0 (equal numbers of up and down steps)")

    @classmethod
    def from_string(cls, text: str) -> "LatticePath":
        """Parse a path written over {U, D}."""
        mapping = {"U": 1, "D": -1}
        try:
            return cls(tuple(mapping[ch] for ch in text.strip().upper()))
        except KeyError as e:
            raise ValueError(f"Path strings use only U and D, got {e.args[0]!r}") from None

    def to_string(self) -> str:
        """Serialize over {U, D}."""
        return "".join("U" if step == 1 else "D" for step in self.steps)

    def __str__(self) -> str:
        return self.to_string()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def n(self) -> int:
        """Half the number of steps."""
        return len(self.steps) // 2

    def positions(self) -> list[int]:
        """Sites visited, starting with 0; length 2n + 1."""
        sites = [0]
        for step in self.steps:
            sites.append(sites[-1] + step)
        return sites


@dataclass(frozen=True)
class WeightModel:
    """Tagged choice of potential: Free, Step(V) or Delta(a)."""

    kind: ModelKind = ModelKind.FREE
    strength: float = 0.0

    def __post_init__(self):
        """Validate the model parameters."""
        if self.kind is ModelKind.FREE and self.strength != 0:
            raise ValueError("Free model takes no strength parameter")

        if self.kind is ModelKind.STEP and self.strength < 0:
            raise ValueError("Step height V must be nonnegative")

        if not math.isfinite(self.strength):
            raise ValueError("Model strength must be finite")

    @classmethod
    def free(cls) -> "WeightModel":
        return cls(ModelKind.FREE, 0.0)

    @classmethod
    def step(cls, V: float) -> "WeightModel":
        return cls(ModelKind.STEP, float(V))

    @classmethod
    def delta(cls, a: float) -> "WeightModel":
        return cls(ModelKind.DELTA, float(a))

    @property
    def step_height(self) -> float:
        """V for the step model, 0 otherwise."""
        return self.strength if self.kind is ModelKind.STEP else 0.0

    @property
    def coupling(self) -> float:
        """a for the delta model, 0 otherwise."""
        return self.strength if self.kind is ModelKind.DELTA else 0.0

    def __str__(self) -> str:
        if self.kind is ModelKind.STEP:
            return f"step(V={self.strength:g})"
        if self.kind is ModelKind.DELTA:
            return f"delta(a={self.strength:g})"
        return "free"


@dataclass(frozen=True)
class Query:
    """Endpoints, duration and mass of a propagator evaluation."""

    x0: float
    x1: float
    total_time: float
    mass: float = 1.0

    def __post_init__(self):
        """Validate the query."""
        if not self.total_time > 0:
            raise ValueError("Total time T must be positive")

        if not self.mass > 0:
            raise ValueError("Mass must be positive")

    @property
    def opposite_sides(self) -> bool:
        """Endpoints strictly on opposite sides of x = 0."""
        return self.x0 * self.x1 < 0

    @property
    def same_side(self) -> bool:
        """Endpoints strictly on the same side of x = 0."""
        return self.x0 * self.x1 > 0

    def swapped(self) -> "Query":
        """Exchange x0 and x1."""
        return replace(self, x0=self.x1, x1=self.x0)

    def reflected(self) -> "Query":
        """Map (x0, x1) to (-x0, -x1)."""
        return replace(self, x0=-self.x0, x1=-self.x1)


@dataclass(frozen=True)
class PropagatorValue:
    """Complex amplitude tagged with its time kind."""

    amplitude: complex
    kind: TimeKind = TimeKind.EUCLIDEAN

    def __post_init__(self):
        object.__setattr__(self, "amplitude", complex(self.amplitude))

    @property
    def real(self) -> float:
        return self.amplitude.real

    @property
    def imag(self) -> float:
        return self.amplitude.imag

    @property
    def modulus(self) -> float:
        return abs(self.amplitude)

    def relative_deviation(self, other: "PropagatorValue") -> float:
        """|self - other| / |other| (absolute deviation when other is 0)."""
        scale = abs(other.amplitude)
        diff = abs(self.amplitude - other.amplitude)
        return diff / scale if scale > 0 else diff


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and panel budget for adaptive quadrature."""

    abs_tol: float = 1e-13
    rel_tol: float = 1e-11
    max_subdivisions: int = 200
    endpoint_substitution: bool = True

    def __post_init__(self):
        """Validate quadrature settings."""
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("Quadrature tolerances must be positive")

        if self.max_subdivisions < 1:
            raise ValueError("Max subdivisions must be at least 1")

    @classmethod
    def from_config(cls, **overrides) -> "QuadratureSpec":
        """Defaults from the toolkit configuration."""
        from utils.config import config_manager

        abs_tol, rel_tol, max_subdivisions = config_manager.get_quadrature_settings()
        settings = dict(abs_tol=abs_tol, rel_tol=rel_tol, max_subdivisions=max_subdivisions)
        settings.update(overrides)
        return cls(**settings)

    def inner(self) -> "QuadratureSpec":
        """Tolerances for the inner integral of a nested pair (one tenth)."""
        return replace(self, abs_tol=self.abs_tol / 10, rel_tol=self.rel_tol / 10)

    def relative_to(self, scale: float) -> "QuadratureSpec":
        """Lower abs_tol to rel_tol * |scale| for integrals known to be of size scale."""
        if scale == 0:
            return self
        return replace(self, abs_tol=min(self.abs_tol, self.rel_tol * abs(scale)))


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with its error estimate and the panels spent."""

    value: float
    error: float
    panels: int = 0


class ExtrapolationResult(NamedTuple):
    """Continuum-limit estimate from a lattice sweep."""

    estimate: float
    error_estimate: float
    exponents: tuple[float, ...] = ()


@dataclass
class SweepSample:
    """One lattice size and its density estimate u / (2 eta)."""

    n: int
    value: float
    relative_error: Optional[float] = None
