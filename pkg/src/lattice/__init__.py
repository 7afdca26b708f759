"""Random-walk lattice: loops, weights, return densities and the transfer-matrix oracle."""

from lattice.paths import (
    boundary_crossings,
    check_enumeration_bound,
    chung_feller_map,
    enumerate_loops,
    iterate_to_fixed_point,
    time_below_steps,
)
from lattice.weights import crossing_factor, path_weight, step_factor
from lattice.densities import (
    LoopStatistics,
    catalan_density,
    free_density,
    histogram_rows,
    lattice_density_bruteforce,
    lattice_density_closed,
    loop_statistics,
)
from lattice.transfer import (
    lattice_oracle_density,
    oracle_sizes,
    site_for,
    step_weights,
    transfer_matrix_density,
)

__all__ = [
    "boundary_crossings",
    "check_enumeration_bound",
    "chung_feller_map",
    "enumerate_loops",
    "iterate_to_fixed_point",
    "time_below_steps",
    "crossing_factor",
    "path_weight",
    "step_factor",
    "LoopStatistics",
    "catalan_density",
    "free_density",
    "histogram_rows",
    "lattice_density_bruteforce",
    "lattice_density_closed",
    "loop_statistics",
    "lattice_oracle_density",
    "oracle_sizes",
    "site_for",
    "step_weights",
    "transfer_matrix_density",
]
