"""Path decomposition of propagators by crossing times of x = 0."""

from pdx.quadrature import integrate, integrate_triangle
from pdx.kernels import (
    EdgePropagator,
    Kernel,
    LegPotential,
    edge_of,
    make_delta_edge,
    make_delta_kernel,
    make_free_edge,
    make_free_kernel,
    make_step_edge,
    model_edge,
)
from pdx.decomposition import (
    first_crossing_integral,
    first_last_integral,
    last_crossing_integral,
    pdx_first_crossing,
    pdx_first_last,
    pdx_last_crossing,
    pdx_same_side,
)
from pdx.assembly import (
    assemble_delta_first_last,
    assemble_delta_full,
    assemble_step_full,
    delta_full_integral,
    step_full_integral,
)
from pdx.verification import (
    VerificationEntry,
    VerificationReport,
    free_symmetry_values,
    verify_delta_assembly,
    verify_free_first_last,
    verify_free_identity,
    verify_step_free_limit,
    verify_step_lattice_oracle,
)

__all__ = [
    "integrate",
    "integrate_triangle",
    "EdgePropagator",
    "Kernel",
    "LegPotential",
    "edge_of",
    "make_delta_edge",
    "make_delta_kernel",
    "make_free_edge",
    "make_free_kernel",
    "make_step_edge",
    "model_edge",
    "first_crossing_integral",
    "first_last_integral",
    "last_crossing_integral",
    "pdx_first_crossing",
    "pdx_first_last",
    "pdx_last_crossing",
    "pdx_same_side",
    "assemble_delta_first_last",
    "assemble_delta_full",
    "assemble_step_full",
    "delta_full_integral",
    "step_full_integral",
    "VerificationEntry",
    "VerificationReport",
    "free_symmetry_values",
    "verify_delta_assembly",
    "verify_free_first_last",
    "verify_free_identity",
    "verify_step_free_limit",
    "verify_step_lattice_oracle",
]
