import numpy as np
import pytest

from ptneg.states import DensityMatrix, PureState


def random_hermitian(rng, dim, scale=1.0):
    X = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (X + X.conj().T) / 2


def random_density(rng, m, n, rank=None):
    N = m * n
    rank = N if rank is None else rank
    G = rng.standard_normal((N, rank)) + 1j * rng.standard_normal((N, rank))
    R = G @ G.conj().T
    return DensityMatrix(R / np.trace(R).real, (m, n))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def bell():
    return PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))


@pytest.fixture
def singlet():
    return PureState(np.array([0, 1, -1, 0]) / np.sqrt(2), (2, 2))
