import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pathcover.graph import build_graph


@pytest.fixture
def k4():
    return build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)], require_cubic=True)


@pytest.fixture
def k33():
    return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], require_cubic=True)


@pytest.fixture
def prism():
    return build_graph(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        require_cubic=True,
    )


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2: the shared vertex is a cut vertex
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def path5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star():
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])
