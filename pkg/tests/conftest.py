import numpy as np
import pytest

from eoradius.radii import OperatorTuple


def jordan(n):
    """Nilpotent Jordan block: ones on the superdiagonal."""
    return np.diag(np.ones(n - 1), 1).astype(np.complex128)


def ginibre(rng, n, scale=1.0):
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_tuple(rng, d, n, scale=1.0):
    return OperatorTuple([ginibre(rng, n, scale) for _ in range(d)])


@pytest.fixture
def J():
    return jordan(2)


@pytest.fixture
def pauli():
    sx = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    sy = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    sz = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    return OperatorTuple([sx, sy, sz])


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
