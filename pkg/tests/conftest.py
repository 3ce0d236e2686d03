import pytest

from hgops.algebra import dual_numbers, ground_field, q_times_q
from hgops.verify import Context, RunConfig


@pytest.fixture(scope="session")
def dual():
    return dual_numbers()


@pytest.fixture(scope="session")
def qq():
    return q_times_q()


@pytest.fixture(scope="session")
def field():
    return ground_field()


@pytest.fixture(scope="session")
def ctx_dual(dual):
    return Context(dual, RunConfig())


@pytest.fixture(scope="session")
def ctx_qq(qq):
    return Context(qq, RunConfig())
