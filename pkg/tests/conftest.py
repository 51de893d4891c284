import pytest

from krcrystal.core import Params
from krcrystal.polytope import PolytopePoint


def small_params(n_max=4, m_max=3):
    return [Params(n, i, m) for n in range(1, n_max + 1) for i in range(1, n + 1) for m in range(1, m_max + 1)]


def ids(p):
    return f"n{p.n}i{p.i}m{p.m}"


@pytest.fixture
def worked_point():
    """Target element of the three-step lowering example, (n, i, m) = (5, 3, 9)."""
    return PolytopePoint(Params(5, 3, 9), [[0, 1, 1], [1, 3, 4], [1, 3, 1]])


@pytest.fixture
def stat_point():
    """The (i, n) = (3, 6) pattern used for step-path statistics; m is large."""
    return PolytopePoint(Params(6, 3, 20), [[2, 0, 2], [0, 1, 2], [1, 2, 1], [1, 0, 5]])
