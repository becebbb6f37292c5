"""
Pytest configuration and fixtures for the solver tests.

This file is automatically discovered by pytest and provides
shared fixtures and configuration for all test modules.
"""

import sys
from pathlib import Path

import pytest
import yaml

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from knapsack_ca.bench.problems import builtin_problem  # noqa: E402
from knapsack_ca.evolution.config import EvolutionConfig  # noqa: E402
from knapsack_ca.knapsack.problem import Instance  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def fitness_cases():
    """Hand-computed damping, fitness and rate values."""
    with open(FIXTURES / "fitness_cases.yaml", encoding="utf-8") as f:
        return yaml.safe_load(f)


@pytest.fixture
def p3():
    return builtin_problem("P3")


@pytest.fixture
def p4():
    return builtin_problem("P4")


@pytest.fixture
def unit_weights():
    """Six unit-weight items worth 10 down to 5; every selection fits."""
    return Instance.from_items([1] * 6, [10, 9, 8, 7, 6, 5], 6, name="U6")


@pytest.fixture
def small_config():
    """A short run that still exercises every code path."""
    return EvolutionConfig(population_size=20, max_iterations=10, seed=1)


# Add pytest CLI options
def pytest_addoption(parser):
    """Add custom pytest options."""
    parser.addoption(
        "--reproduction",
        action="store_true",
        default=False,
        help="Run the multi-run benchmark reproduction tests (slow)",
    )


def pytest_collection_modifyitems(config, items):
    """Skip reproduction tests unless asked for."""
    if config.getoption("--reproduction"):
        # Run all tests
        return

    skip_reproduction = pytest.mark.skip(reason="need --reproduction option to run")
    for item in items:
        if "reproduction" in item.keywords:
            item.add_marker(skip_reproduction)
