"""Integration tests: lattice densities converging to continuum propagators."""

import math

import pytest

from continuum import (
    check_slope,
    continuum_extrapolate,
    continuum_sweep,
    continuum_target,
    convergence_slope,
    default_exponents,
    free_propagator,
)
from lattice import lattice_oracle_density, oracle_sizes
from utils.data_types import Query, WeightModel

SWEEP = [1000, 10000, 100000]


@pytest.mark.parametrize("model,slope,tolerance", [
    (WeightModel.free(), -1.0, 1e-8),
    (WeightModel.step(1.0), -1.0, 1e-6),
    (WeightModel.delta(1.0), -0.5, 1e-4),
])
def test_return_density_continuum_limit(model, slope, tolerance):
    """Test u / 2 eta converges at the model's order and extrapolates to the closed form."""
    samples = continuum_sweep(model, SWEEP, 1.0, 1.0)
    pairs = [(s.n, s.value) for s in samples]
    target = continuum_target(model, 1.0, 1.0)

    observed = convergence_slope(pairs, target)
    assert observed == pytest.approx(slope, abs=0.2)
    assert check_slope(observed, model)

    limit = continuum_extrapolate(pairs, default_exponents(model, len(pairs) - 1))
    assert limit.estimate == pytest.approx(target, rel=tolerance)


def test_errors_shrink_along_sweep():
    """Test every model's relative error decreases with n."""
    for model in (WeightModel.free(), WeightModel.step(2.0), WeightModel.delta(0.5)):
        errors = [abs(s.relative_error) for s in continuum_sweep(model, SWEEP, 1.0, 1.0)]
        assert errors[0] > errors[1] > errors[2]


def test_step_target_value():
    """Test the Euclidean step edge at m = V = T = 1 is about 0.252175."""
    assert continuum_target(WeightModel.step(1.0), 1.0, 1.0) == pytest.approx(0.252175, rel=1e-4)


@pytest.mark.slow
def test_transfer_matrix_free_oracle():
    """Test the off-diagonal transfer-matrix oracle converges to the free propagator."""
    q = Query(1.0, -1.0, 1.0, 1.0)
    samples = [(n, lattice_oracle_density(q, WeightModel.free(), n)) for n in oracle_sizes(q)]
    limit = continuum_extrapolate(samples, (0.5, 1.0))
    expected = math.exp(-2) / math.sqrt(2 * math.pi)
    assert limit.estimate == pytest.approx(expected, rel=1e-3)
    assert free_propagator(q).real == pytest.approx(expected, rel=1e-15)
