import numpy as np
import pytest
from hypothesis import strategies as st

from quatpoly import QPolynomial, Quaternion

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)
small_ints = st.integers(min_value=-5, max_value=5).map(float)
int_quaternions = st.builds(Quaternion, small_ints, small_ints, small_ints, small_ints)


def qpolys(max_degree=5, elements=quaternions):
    return st.lists(elements, min_size=2, max_size=max_degree + 1).map(QPolynomial).filter(
        lambda f: f.degree >= 1)


def as_su2(q: Quaternion) -> np.ndarray:
    """Independent representation of q as a 2x2 complex matrix."""
    a = complex(q.w, q.x)
    b = complex(q.y, q.z)
    return np.array([[a, b], [-b.conjugate(), a.conjugate()]])


def random_quaternion(rng, scale=1.0) -> Quaternion:
    return Quaternion.from_seq(scale * rng.standard_normal(4))


def random_qpoly(rng, degree) -> QPolynomial:
    return QPolynomial(rng.standard_normal((degree + 1, 4)).tolist())


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
