import pytest

from cycliccovers import ffield


@pytest.fixture(scope="session")
def q3():
    """F_3 with ell = 2 (quadratic covers)."""
    return ffield.make_field(3, 1, 2)


@pytest.fixture(scope="session")
def q5():
    """F_5 with ell = 2."""
    return ffield.make_field(5, 1, 2)


@pytest.fixture(scope="session")
def q4():
    """F_4 with ell = 3 (cubic covers, non-prime base field)."""
    return ffield.make_field(2, 2, 3)


@pytest.fixture(scope="session")
def q7():
    """F_7 with ell = 3."""
    return ffield.make_field(7, 1, 3)


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Shared on-disk enumeration cache for the whole test session."""
    return str(tmp_path_factory.mktemp("orbit-cache"))
