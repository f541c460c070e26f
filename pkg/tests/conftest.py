import json
from pathlib import Path

import numpy as np
import pytest

from weylkac.numerics import Grid2D

ORACLES = json.loads((Path(__file__).parent / "oracles" / "values.json").read_text())


@pytest.fixture
def grid():
    return Grid2D(64, 16.0)


@pytest.fixture
def small_grid():
    return Grid2D(16, 8.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def oracles():
    return ORACLES


_ACCEPTANCE = []


@pytest.fixture
def report_line(capsys):
    """Print one acceptance line now and again in the terminal summary."""

    def emit(number, passed, detail):
        line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        with capsys.disabled():
            print("\n" + line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
