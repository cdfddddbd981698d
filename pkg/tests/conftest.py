import pytest
from hypothesis import strategies as st

from monoidrees import fixtures
from monoidrees.ring import GF, QQ, MultiPoly

F32003 = GF(32003)


def P(text, n=2, field=QQ):
    return MultiPoly.parse(text, n, field)


@st.composite
def polys(draw, n=2, field=QQ, max_terms=5, max_exp=2, bihom=None):
    """Random polynomials in n t-variables and n+1 X-variables."""
    nv = 2 * n + 1
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        if bihom is None:
            mono = tuple(draw(st.integers(0, max_exp)) for _ in range(nv))
        else:
            mono = _random_bihom(draw, n, *bihom)
        terms[mono] = draw(st.integers(-20, 20))
    return MultiPoly(n, field, terms)


def _random_bihom(draw, n, i, j):
    t = [0] * n
    for _ in range(i):
        t[draw(st.integers(0, n - 1))] += 1
    x = [0] * (n + 1)
    for _ in range(j):
        x[draw(st.integers(0, n))] += 1
    return tuple(t + x)


@pytest.fixture
def conic():
    return fixtures.conic()


@pytest.fixture
def surface():
    return fixtures.surface()


@pytest.fixture
def quadric():
    return fixtures.quadric_surface()


@pytest.fixture
def monoid():
    return fixtures.monoid_example()


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(line)
