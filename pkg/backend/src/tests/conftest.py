"""Shared fixtures for the sigmoid-radius test suite."""

import cmath
import math

import pytest

from src.config.oracle import OracleSettings, get_oracle_settings


@pytest.fixture
def fast_settings() -> OracleSettings:
    """Coarser sampling; golden-section refinement keeps the maxima exact."""
    return OracleSettings(samples=1024, max_samples=4096, workers=2)


@pytest.fixture
def clear_settings_cache():
    get_oracle_settings.cache_clear()
    yield
    get_oracle_settings.cache_clear()


@pytest.fixture
def sample_disk_points():
    """Deterministic points spread over |z| <= 0.5, away from the origin."""
    points = []
    for k in range(64):
        radius = 0.05 + 0.45 * (k % 8) / 7
        angle = 2 * math.pi * k / 64 + 0.1
        points.append(radius * cmath.exp(1j * angle))
    return points
