"""Configuration for pytest."""

import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.constructor import build_family, build_open_pair  # noqa: E402


@pytest.fixture(scope="session")
def family1():
    """Closed family member for n = 1."""
    return build_family(1)


@pytest.fixture(scope="session")
def control_pair():
    """Separable open pair for n = 0."""
    return build_open_pair(0)
