import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from innertwist.examples import (build_exterior_line, build_exterior_square,
                                 build_group_algebra_cqt, build_group_algebra_square,
                                 build_sweedler)
from innertwist.scalars import CyclotomicField

FIELD_ORDERS = (1, 2, 3, 4, 5, 6, 8, 12)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def scalars(field: CyclotomicField, nonzero: bool = False):
    """Random elements of Q(zeta_n) as rational coefficient vectors."""
    s = st.lists(rationals, min_size=field.degree, max_size=field.degree).map(
        lambda cs: field.from_poly(cs))
    if nonzero:
        s = s.filter(lambda x: not x.is_zero())
    return s


@pytest.fixture(scope="session")
def kz3():
    return build_group_algebra_cqt(3, 1)


@pytest.fixture(scope="session")
def sweedler():
    return build_sweedler()


@pytest.fixture(scope="session")
def exterior():
    return build_exterior_line(Fraction(2))


@pytest.fixture(scope="session")
def kz2_square():
    return build_group_algebra_square(2)


@pytest.fixture(scope="session")
def exterior_square():
    return build_exterior_square()


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
