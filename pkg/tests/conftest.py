from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from companion_smith.exactmat import IntMatrix
from companion_smith.intpoly import IntPolynomial

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_int = st.integers(-9, 9)


def polys(max_deg=6, coeffs=small_int):
    return st.lists(coeffs, max_size=max_deg + 1).map(IntPolynomial)


def monics(min_deg=1, max_deg=6, coeffs=small_int):
    return st.lists(coeffs, min_size=min_deg, max_size=max_deg).map(lambda c: IntPolynomial(c + [1]))


@st.composite
def matrices(draw, max_dim=6, min_dim=0, entries=small_int):
    r = draw(st.integers(min_dim, max_dim))
    c = draw(st.integers(min_dim, max_dim))
    return IntMatrix(r, c, draw(st.lists(entries, min_size=r * c, max_size=r * c)))


@st.composite
def square_matrices(draw, max_dim=5, min_dim=1, entries=small_int):
    n = draw(st.integers(min_dim, max_dim))
    return IntMatrix(n, n, draw(st.lists(entries, min_size=n * n, max_size=n * n)))
