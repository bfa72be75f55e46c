import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from monideal.core import MonomialIdeal, Staircase  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def staircases(draw, nmax=5, emax=8):
    n = draw(st.integers(2, nmax))
    emax = max(emax, n - 1)
    a = sorted(draw(st.sets(st.integers(1, emax), min_size=n - 1, max_size=n - 1)), reverse=True)
    b = sorted(draw(st.sets(st.integers(1, emax), min_size=n - 1, max_size=n - 1)), reverse=True)
    return Staircase(tuple(a) + (0,), tuple(b) + (0,))


@st.composite
def zero_dim_ideals(draw, emax=10, extra=4):
    A = draw(st.integers(1, emax))
    B = draw(st.integers(1, emax))
    pts = draw(st.lists(st.tuples(st.integers(0, emax), st.integers(0, emax)), max_size=extra))
    return MonomialIdeal(2, [(A, 0), (0, B)] + pts)


@st.composite
def m_full_staircases(draw, nmax=6, emax=12):
    """Built from the shape that characterizes m-fullness: pick n, k, then
    a_k..a_n = n-k..0 and b_1..b_{n-k+1} free above the forced tail."""
    n = draw(st.integers(2, nmax))
    k = draw(st.integers(1, n))
    # a_1 > ... > a_k = n-k > ... > 0
    top_a = sorted(draw(st.sets(st.integers(n - k + 1, n - k + emax), min_size=k - 1, max_size=k - 1)), reverse=True)
    a = tuple(top_a) + tuple(range(n - k, -1, -1))
    # b_{n-k+1} = k-1, ..., b_n = 0 ; b_1 > ... > b_{n-k} > k-1
    top_b = sorted(draw(st.sets(st.integers(k, k - 1 + emax), min_size=n - k, max_size=n - k)), reverse=True)
    b = tuple(top_b) + tuple(range(k - 1, -1, -1))
    return Staircase(a, b)


@pytest.fixture
def counterexample():
    return Staircase.from_gens([(3, 0), (2, 8), (1, 15), (0, 21)])


@pytest.fixture
def product_example():
    return Staircase.from_gens([(3, 0), (2, 1), (1, 4), (0, 10)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
