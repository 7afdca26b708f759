"""Serializable run configuration and manifest for toolkit commands."""

import argparse
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from cli.arguments import parse_range
from utils.data_types import QuadratureSpec, WeightModel


class CommandName(str, Enum):
    """Toolkit subcommands."""
    COUNT = "count"
    DENSITY = "density"
    HISTOGRAM = "histogram"
    CONVERGE = "converge"
    PDX_VERIFY = "pdx-verify"


class OutputFormat(str, Enum):
    """Table output formats."""
    CSV = "csv"
    JSON = "json"


DEFAULT_SWEEPS = {
    CommandName.DENSITY: [1, 2, 5, 10],
    CommandName.HISTOGRAM: [8],
    CommandName.CONVERGE: [1000, 10000, 100000],
}


class RunConfig(BaseModel):
    """Everything a run depends on; runs are deterministic given this config."""
    command: CommandName
    model: str = "free"
    V: float = Field(default=1.0, ge=0.0)
    a: float = 1.0
    mass: float = Field(default=1.0, gt=0.0)
    total_times: List[float] = [1.0]
    ns: List[int] = []
    n_range: Optional[Tuple[int, int]] = None
    x0: List[float] = []
    x1: Optional[float] = None
    tolerance: Optional[float] = Field(default=None, gt=0.0)
    unit: float = Field(default=1.0, gt=0.0)
    lattice_oracle: bool = False
    max_subdivisions: Optional[int] = Field(default=None, ge=1)
    endpoint_substitution: bool = True
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV

    @field_validator('total_times')
    @classmethod
    def validate_total_times(cls, v):
        if any(t <= 0 for t in v):
            raise ValueError('total times must be positive')
        return v

    @field_validator('ns')
    @classmethod
    def validate_ns(cls, v):
        if any(n < 0 for n in v):
            raise ValueError('n must be nonnegative')
        return v

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Build the config from parsed arguments, filling per-command defaults.

        Raises:
            UsageError: If the count range is malformed.
        """
        command = CommandName(args.command)
        total_time = getattr(args, "total_time", None)
        if total_time is None:
            total_times = [1.0]
        elif isinstance(total_time, list):
            total_times = total_time
        else:
            total_times = [total_time]

        ns = getattr(args, "ns", None)
        if ns is None:
            ns = DEFAULT_SWEEPS.get(command, [])

        n_range = parse_range(args.n_range) if command is CommandName.COUNT else None

        return cls(
            command=command,
            model=getattr(args, "model", "free"),
            V=getattr(args, "V", 1.0),
            a=getattr(args, "a", 1.0),
            mass=getattr(args, "mass", 1.0),
            total_times=total_times,
            ns=ns,
            n_range=n_range,
            x0=getattr(args, "x0", None) or [],
            x1=getattr(args, "x1", None),
            tolerance=getattr(args, "tol", None),
            unit=getattr(args, "unit", 1.0),
            lattice_oracle=getattr(args, "lattice_oracle", False),
            max_subdivisions=getattr(args, "max_subdivisions", None),
            endpoint_substitution=not getattr(args, "no_endpoint_substitution", False),
            out=args.out,
            format=getattr(args, "format", "json" if command is CommandName.PDX_VERIFY else "csv"),
        )

    def weight_model(self) -> WeightModel:
        if self.model == "step":
            return WeightModel.step(self.V)
        if self.model == "delta":
            return WeightModel.delta(self.a)
        return WeightModel.free()

    def quadrature(self) -> QuadratureSpec:
        overrides = {"endpoint_substitution": self.endpoint_substitution}
        if self.max_subdivisions is not None:
            overrides["max_subdivisions"] = self.max_subdivisions
        return QuadratureSpec.from_config(**overrides)


class RunManifest(BaseModel):
    """Written next to every output file."""
    config: RunConfig
    version: str
    data_file: str
    sha256: str
