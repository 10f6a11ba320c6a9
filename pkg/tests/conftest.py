import pytest

from awgshuffle import AwgSpec, build_network


@pytest.fixture(scope="session")
def awg36():
    return AwgSpec(3, 6)


@pytest.fixture(scope="session")
def w323():
    return build_network(3, 2, 3)
