import pytest

from kpotent import PrimeField, QuadraticField, RationalField


@pytest.fixture
def f5():
    return PrimeField(5)


@pytest.fixture
def f13():
    return PrimeField(13)


@pytest.fixture
def rationals():
    return RationalField()


@pytest.fixture
def qsqrt2():
    return QuadraticField(2)


@pytest.fixture
def qsqrt6():
    return QuadraticField(6)
