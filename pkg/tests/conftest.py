import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from otheta.algebra import Element, GenPair
from otheta.graph import ThetaSpec, Word
from otheta.scalars import QI

settings.register_profile(
    "default", deadline=None, max_examples=60, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def thetas(draw, sizes=(2, 3)):
    m = draw(st.sampled_from(sizes))
    n = draw(st.sampled_from(sizes))
    kind = draw(st.sampled_from(["id", "flip", "random"]))
    if kind == "id":
        return ThetaSpec.identity(m, n)
    if kind == "flip" and m == n:
        return ThetaSpec.flip(m)
    return ThetaSpec.random(m, n, random.Random(draw(st.integers(0, 10 ** 6))))


@st.composite
def words(draw, theta, maxdeg=(2, 2)):
    k = draw(st.integers(0, maxdeg[0]))
    l = draw(st.integers(0, maxdeg[1]))
    blues = tuple(draw(st.lists(st.integers(1, theta.m), min_size=k, max_size=k)))
    reds = tuple(draw(st.lists(st.integers(1, theta.n), min_size=l, max_size=l)))
    return Word(blues, reds)


small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
gaussian = st.builds(QI, small_rationals, small_rationals)


@st.composite
def elements(draw, theta, maxdeg=(2, 2), max_terms=5, gauge_invariant=False, coeffs=gaussian):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        u = draw(words(theta, maxdeg))
        if gauge_invariant:
            v = draw(words(theta, (len(u.blues), len(u.reds))).filter(lambda w, u=u: w.degree == u.degree))
        else:
            v = draw(words(theta, maxdeg))
        terms[GenPair(u, v)] = draw(coeffs)
    return Element(theta, terms)


def all_words(theta, maxdeg):
    from otheta.graph import words_up_to
    return words_up_to(maxdeg, theta)


@pytest.fixture
def id22():
    return ThetaSpec.identity(2, 2)


@pytest.fixture
def flip22():
    return ThetaSpec.flip(2)


# acceptance report: one line per criterion, shown at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
