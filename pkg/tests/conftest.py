import pytest

from g2heights.prec import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(256)


@pytest.fixture(scope="session")
def ctx128():
    return PrecisionContext(128)
