import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import matroid_core  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


@pytest.fixture
def square():
    """Graphic matroid of the 4-cycle read as a rank 2 matroid: circuits {1 3} {2 4}."""
    return matroid_core.from_bases(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def u24():
    return matroid_core.uniform(2, 4)


@pytest.fixture
def k4():
    return matroid_core.Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def c4():
    return matroid_core.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def star():
    """Element 1 is a coloop; the core is U_{1,2}."""
    return matroid_core.from_bases(3, [(1, 2), (1, 3)])


@pytest.fixture
def data_dir():
    return DATA_DIR
