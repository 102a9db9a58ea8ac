import sys

import numpy as np
import pytest

from ultrastrong.hilbert import FockCutoff


def low_block(cutoff, levels):
    """Indices of basis states with both occupations below ``levels``."""
    m, n = cutoff.grids()
    return np.flatnonzero((m < levels) & (n < levels))


def crop(M, cutoff, levels):
    keep = low_block(cutoff, levels)
    return np.asarray(M)[np.ix_(keep, keep)]


@pytest.fixture(scope="session")
def big_cutoff():
    # roomy enough that conjugations by U and S are exact on levels < 6 to ~1e-12
    return FockCutoff(36, 36)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
