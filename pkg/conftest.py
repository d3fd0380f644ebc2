import os
import sys
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from utils.gf_tower import build_tower  # noqa: E402

settings.register_profile("sumrank", max_examples=200, deadline=None)
settings.load_profile("sumrank")


@pytest.fixture(scope='session')
def tower_a():
    """ q0 = 2, m = 2, s = 2, ell = 3: F = GF(4) inside GF(16), n = 6 """
    return build_tower(2, 1, 2, 2, 3)


@pytest.fixture(scope='session')
def tower_b():
    """ q0 = 2, m = 2, s = 3, ell = 7: n = 14 """
    return build_tower(2, 1, 2, 3, 7)


@pytest.fixture(scope='session')
def tower_gabidulin():
    """ ell = 1, m = 3: a single block """
    return build_tower(2, 1, 3, 1, 1)


@pytest.fixture(scope='session')
def tower_classical():
    """ m = N = 1, s = 2, ell = 3: plain cyclic codes over GF(2) """
    return build_tower(2, 1, 1, 2, 3)
