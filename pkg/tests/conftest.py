import random

import pytest

from detlab.rings import Integers, PrimeField, Rationals


@pytest.fixture
def ZZ():
    return Integers()


@pytest.fixture
def QQ():
    return Rationals()


@pytest.fixture
def F7():
    return PrimeField(7)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
