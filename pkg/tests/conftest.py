import pytest

from skewcodes.gf import make_field


@pytest.fixture(scope="session")
def f25():
    return make_field(5, 2, [1, 1, 1], 1)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 2, [1, 0, 1], 1)


@pytest.fixture(scope="session")
def f49():
    return make_field(7, 2, [3, 6, 1], 1)


@pytest.fixture(scope="session")
def f27():
    return make_field(3, 3, [1, 2, 0, 1], 1)


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 1, [0, 1], 1)
