import pytest

from liepq.exact_linalg import Matrix, rat
from liepq.lie_core import LieAlgebra
from liepq.so_pq import so_pq_algebra


def unit_matrix(i, j, n):
    m = Matrix.zeros(n, n)
    m.entries[i * n + j] = rat(1)
    return m


@pytest.fixture(scope="session")
def so3_rotations():
    """so(3) in the classic rotation-generator basis with [L1, L2] = L3."""
    l1 = Matrix.from_rows([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    l2 = Matrix.from_rows([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    l3 = Matrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    return LieAlgebra.from_matrices([l1, l2, l3])


@pytest.fixture(scope="session")
def so21():
    return so_pq_algebra(2, 1)


@pytest.fixture(scope="session")
def so31():
    return so_pq_algebra(3, 1)


@pytest.fixture(scope="session")
def so22():
    return so_pq_algebra(2, 2)
