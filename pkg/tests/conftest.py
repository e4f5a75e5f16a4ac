import numpy as np
import pytest

from minkbeam.geometry import convex_hull

ACCEPTANCE_LINES: list[str] = []

# Polygons P1 (quadrilateral) and P2 (triangle) of the two-summand worked example.
FIG1_P1 = (0.4 - 0.7j, 0.6 + 0.7j, -0.4 + 0.6j, -0.3 - 0.4j)
FIG1_P2 = (0.2 - 0.7j, 0.1 + 0.3j, -0.4 - 0.1j)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_polygon(rng, max_vertices=6, scale=1.0):
    k = int(rng.integers(1, max_vertices + 1))
    pts = scale * (rng.standard_normal(k) + 1j * rng.standard_normal(k))
    return convex_hull(pts)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
