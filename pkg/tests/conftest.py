import pytest
from hypothesis import settings

from bhnotation.terms import BaseOrder, enumerate_terms

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

BASE2 = BaseOrder.finite(2)
# complexity <= 2, Gamma indices <= 2: 1810 terms
POOL2 = enumerate_terms(BASE2, 2, 2)
POOL1 = enumerate_terms(BASE2, 1, 2)


@pytest.fixture(scope="session")
def pool2():
    return POOL2


@pytest.fixture(scope="session")
def pool1():
    return POOL1
