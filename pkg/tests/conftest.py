from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("deterministic")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


def naive_pattern(rows, cols):
    """Plain set-based intersection grid, independent of the bit-packed path."""
    return [
        [1 if set(r) & set(c) else 0 for c in cols]
        for r in rows
    ]


def elements_of(fp):
    """Row and column element tuples of a family, for naive cross-checks."""
    return [s.elements() for s in fp.rows], [s.elements() for s in fp.cols]
