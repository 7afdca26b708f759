"""Exact and asymptotic counts of lattice loops."""

from combinat.counts import (
    central_binomial,
    catalan,
    catalan_triangle,
    crossing_partition_count,
    crossing_partition_row,
)
from combinat.asymptotics import (
    catalan_asymptotic,
    crossing_count_asymptotic,
    crossing_log_profile,
    log_catalan,
    log_central_binomial,
)
from combinat.factorials import ExactFactorials, factorials

__all__ = [
    "central_binomial",
    "catalan",
    "catalan_triangle",
    "crossing_partition_count",
    "crossing_partition_row",
    "catalan_asymptotic",
    "crossing_count_asymptotic",
    "crossing_log_profile",
    "log_catalan",
    "log_central_binomial",
    "ExactFactorials",
    "factorials",
]
