import math

import numpy as np
import pytest

from weberbox import numerov
from weberbox.potentials import PiecewisePotential


def numerov_decaying(energy, l=0.0, y_end=12.0, h=1e-3):
    """Numerov solution of psi'' = ((|z|-l)^2/4 - E) psi on [l, l + y_end], integrated inward.

    Returns (y, psi) with y = z - l; normalization is arbitrary.
    """
    pot = PiecewisePotential(l)
    grid = numerov.GridSpec(l, l + y_end, h)
    z = grid.points()
    seed = (1.0, math.exp(pot.log_decay(energy, z[-2]) - pot.log_decay(energy, z[-1])))
    return z - l, numerov.integrate(pot, energy, grid, "left", seed)


@pytest.fixture
def decaying_oracle():
    return numerov_decaying


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
