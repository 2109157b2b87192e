import pytest

from lineflags import build_poset


@pytest.fixture(scope="session")
def poset2():
    return build_poset((1, 1), (1, 1))


@pytest.fixture(scope="session")
def poset3():
    return build_poset((1, 1, 1), (1, 1, 1))


@pytest.fixture(scope="session")
def poset4():
    return build_poset((1, 1, 1, 1), (1, 1, 1, 1))
