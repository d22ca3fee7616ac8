"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from inlogic.interval import Interval, NeutroTriple, UnitInterval
from inlogic.sets import InsSet, Universe

# k/16 is exact in binary, so lattice laws can be checked with ==
DYADIC = st.integers(0, 16).map(lambda k: k / 16)


@st.composite
def unit_intervals(draw, values=DYADIC):
    a, b = draw(values), draw(values)
    return UnitInterval(min(a, b), max(a, b))


@st.composite
def intervals(draw):
    a = draw(st.integers(-64, 64)) / 16
    b = draw(st.integers(-64, 64)) / 16
    return Interval(min(a, b), max(a, b))


def triples(values=DYADIC):
    iv = unit_intervals(values)
    return st.builds(NeutroTriple, iv, iv, iv)


def universes(max_size=5):
    return st.integers(1, max_size).map(lambda n: Universe(tuple(f"x{k}" for k in range(1, n + 1))))


def sets_on(universe, values=DYADIC):
    return st.lists(triples(values), min_size=len(universe), max_size=len(universe)).map(
        lambda vs: InsSet(universe, tuple(vs))
    )


@st.composite
def set_triples(draw, max_size=5):
    """Three sets over one shared universe."""
    u = draw(universes(max_size))
    return draw(sets_on(u)), draw(sets_on(u)), draw(sets_on(u))
