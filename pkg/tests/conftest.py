import sys

import numpy as np
import pytest

from cgplab import haar_unitary, mori_from_frame


def rand_density(d, rng, rank=None):
    rank = d if rank is None else rank
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def rand_pure(d, rng):
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def rand_mori(d, rng):
    return mori_from_frame(haar_unitary(d, rng))


def incoherent_unitary(d, rng):
    """Random diagonal phases times a random permutation."""
    perm = np.eye(d)[rng.permutation(d)]
    phases = np.exp(2j * np.pi * rng.random(d))
    return perm @ np.diag(phases)


@pytest.fixture
def rng():
    return np.random.default_rng(20170131)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
