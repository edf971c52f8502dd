import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kolkata import from_groups, from_raw_samples, make_analytic  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def f_a():
    return from_raw_samples([20, 20, 30, 50])


@pytest.fixture
def f_b():
    return from_raw_samples([15, 15, 42, 48])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_pairs(rng, max_groups=12, max_value=100, allow_zero=True):
    """Random integer-valued (count, value) data with positive total income."""
    while True:
        g = int(rng.integers(1, max_groups + 1))
        lo = 0 if allow_zero else 1
        values = rng.integers(lo, max_value + 1, size=g)
        counts = rng.integers(1, 21, size=g)
        if values.sum() > 0:
            return [(int(c), int(v)) for c, v in zip(counts, values)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["from_groups", "make_analytic", "random_pairs"]
