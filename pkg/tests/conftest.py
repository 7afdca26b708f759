"""Pytest configuration shared by unit and integration tests."""

import sys
from pathlib import Path

import pytest

# Add src to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "slow: lattice sweeps and nested quadrature taking more than a few seconds")


@pytest.fixture
def unit_query():
    """Opposite-side query at m = T = 1."""
    from utils.data_types import Query

    return Query(x0=1.0, x1=-1.0, total_time=1.0, mass=1.0)
