import numpy as np
import pytest

from centralweno.grid import CellField, Grid1D

# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def sine_field(n: int, boundary=None) -> CellField:
    grid = Grid1D(0.0, 2.0 * np.pi, n)
    e = grid.interfaces
    avg = (np.cos(e[:-1]) - np.cos(e[1:])) / grid.dx
    if boundary is None:
        return CellField.from_interior(grid, avg)
    return CellField.from_interior(grid, avg, boundary)
