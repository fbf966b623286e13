import numpy as np
import pytest

from graphfilt import build_graph, combinatorial_laplacian, erdos_renyi, sensor_graph


def random_graph(index, max_n=100):
    """Deterministic mixed corpus entry: alternates ER and sensor graphs."""
    rng = np.random.default_rng(1000 + index)
    n = int(rng.integers(8, max_n + 1))
    if index % 2 == 0:
        p = float(rng.uniform(0.05, 0.4))
        return erdos_renyi(n, p, 2000 + index)
    return sensor_graph(n, 2000 + index, k=min(6, n - 1))


@pytest.fixture
def p2():
    return build_graph(2, [(0, 1, 1.0)])


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1, 2.0), (1, 2, 3.0)])


@pytest.fixture
def p2_laplacian(p2):
    return combinatorial_laplacian(p2)
