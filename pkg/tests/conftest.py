from fractions import Fraction

import pytest
from hypothesis import strategies as st

from moebius_forest import GaussianRational, Matrix, enumerate_sl2n

CW_L = Matrix(1, 1, 0, 1)
CW_R = Matrix(1, 0, 1, 1)

# distinct left-right pairs: Calkin-Wilf, a stretched variant, touching
# slices, and two pairs with no translation generator
PAIRS = [
    (CW_L, CW_R),
    (Matrix(1, 2, 0, 1), Matrix(1, 0, 2, 1)),
    (Matrix(2, 1, 1, 1), Matrix(1, 0, 1, 1)),
    (Matrix(1, 1, 0, 1), Matrix(1, 1, 1, 2)),
    (Matrix(3, 1, 2, 1), Matrix(1, 0, 3, 1)),
]


@pytest.fixture(scope="session")
def sl2n8():
    return enumerate_sl2n(8)


def positive_fractions(limit=100):
    return st.builds(Fraction, st.integers(1, limit), st.integers(1, limit))


def signed_fractions(limit=1000):
    return st.builds(Fraction, st.integers(-limit, limit), st.integers(1, limit))


def quadrant_points(limit=100):
    return st.builds(GaussianRational, positive_fractions(limit), positive_fractions(limit))


def gaussians(limit=1000):
    return st.builds(GaussianRational, signed_fractions(limit), signed_fractions(limit))


def matrices(max_entry=10):
    """Random SL2(N0) matrix with entries up to max_entry."""
    return st.sampled_from(enumerate_sl2n(max_entry))
