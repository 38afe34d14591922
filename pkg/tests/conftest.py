import pytest
from hypothesis import settings, strategies as st

from conjal import catalog, ModN, QQ, ZZ

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ASSOC_NAMES = ("complex", "split_complex", "dual", "quaternion", "split_quaternion")
ALL_NAMES = ASSOC_NAMES + ("octonion",)

coord = st.integers(min_value=-6, max_value=6)


def elements(alg, coords=coord):
    return st.lists(coords, min_size=alg.dim, max_size=alg.dim).map(alg.element)


def imaginary(alg, coords=coord):
    return st.lists(coords, min_size=alg.dim - 1, max_size=alg.dim - 1).map(
        lambda cs: alg.element([0] + cs))


@pytest.fixture
def H():
    return catalog("quaternion", QQ)


@pytest.fixture
def HZ():
    return catalog("quaternion", ZZ)


@pytest.fixture
def SC():
    return catalog("split_complex", QQ)


@pytest.fixture
def dual3():
    return catalog("dual", ModN(3))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
