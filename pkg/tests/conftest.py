import os
from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from wallcf import DiscreteMeasure, PowerSeries

# exact rationals make single examples slow to predict, so no deadline;
# HYPOTHESIS_PROFILE=thorough for a long soak
settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def rationals(lo=-2, hi=2, max_den=12):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)


def positive_rationals(hi=3, max_den=12):
    return rationals(Fraction(1, max_den), hi, max_den)


@st.composite
def series(draw, min_order=0, max_order=10, lo=-2, hi=2):
    n = draw(st.integers(min_order, max_order))
    return PowerSeries(draw(st.lists(rationals(lo, hi), min_size=n + 1, max_size=n + 1)))


@st.composite
def unit_series(draw, max_order=10):
    """Series with constant term 1 (any tail)."""
    n = draw(st.integers(0, max_order))
    tail = draw(st.lists(rationals(), min_size=n, max_size=n))
    return PowerSeries([1] + tail)


@st.composite
def measures(draw, lo=0, hi=1, max_atoms=5, max_den=10):
    locs = draw(
        st.lists(rationals(lo, hi, max_den), min_size=1, max_size=max_atoms, unique=True)
    )
    ws = draw(
        st.lists(positive_rationals(3, max_den), min_size=len(locs), max_size=len(locs))
    )
    return DiscreteMeasure(zip(locs, ws))


@st.composite
def square_measures(draw, max_atoms=4):
    roots = draw(st.lists(rationals(0, 2, 8), min_size=1, max_size=max_atoms, unique=True))
    ws = draw(st.lists(positive_rationals(3, 8), min_size=len(roots), max_size=len(roots)))
    return DiscreteMeasure((q * q, w) for q, w in zip(roots, ws))
