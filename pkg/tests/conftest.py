import sys
from pathlib import Path

import pytest

from skewlab.corpus import exhaustive_restrictions, make_shift_window, random_corpus
from skewlab.io import load_instance
from skewlab.ring import SkewRing
from skewlab.scalars import GF2

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def fixture_instance(name):
    theta, _ = load_instance(FIXTURES / name)
    return theta


@pytest.fixture
def s2():
    return make_shift_window(2)


@pytest.fixture
def swap():
    return fixture_instance("swap-ab.json")


@pytest.fixture
def identity_a():
    return fixture_instance("identity-on-a.json")


@pytest.fixture
def identity_ab():
    return fixture_instance("identity-ab.json")


@pytest.fixture
def ring2():
    """Build a skew ring over GF(2)."""
    return lambda theta, field=GF2: SkewRing(theta, field)


@pytest.fixture(scope="session")
def small_corpus():
    return exhaustive_restrictions() + random_corpus(40, seed=3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULT_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULT_LINES:
        terminalreporter.write_line(line)
