"""Closed-form continuum propagators and continuum-limit extrapolation."""

from continuum.special import (
    delta_reflection,
    erfcx_complement,
    free_kernel,
    free_tail_integral,
    free_tail_quadrature,
)
from continuum.propagators import (
    boundary_derivative,
    complex_time,
    delta_edge_propagator,
    delta_full_propagator,
    first_crossing_density,
    free_propagator,
    relaxation_factor,
    restricted_propagator,
    step_edge_kernel,
    step_edge_propagator,
)
from continuum.extrapolation import (
    check_slope,
    continuum_extrapolate,
    continuum_sweep,
    continuum_target,
    convergence_slope,
    default_exponents,
    lattice_continuum_density,
)

__all__ = [
    "delta_reflection",
    "erfcx_complement",
    "free_kernel",
    "free_tail_integral",
    "free_tail_quadrature",
    "boundary_derivative",
    "complex_time",
    "delta_edge_propagator",
    "delta_full_propagator",
    "first_crossing_density",
    "free_propagator",
    "relaxation_factor",
    "restricted_propagator",
    "step_edge_kernel",
    "step_edge_propagator",
    "check_slope",
    "continuum_extrapolate",
    "continuum_sweep",
    "continuum_target",
    "convergence_slope",
    "default_exponents",
    "lattice_continuum_density",
]
