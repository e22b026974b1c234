"""Shared hypothesis strategies: random rational orbits and integer modes."""

from fractions import Fraction

from hypothesis import strategies as st

from lagstab import orbit_from_tanh_sq


def rational_simplex(draw, n, max_weight=9):
    weights = draw(
        st.lists(st.integers(1, max_weight), min_size=n, max_size=n)
    )
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


def rational_t(draw, max_den=16):
    den = draw(st.integers(2, max_den))
    num = draw(st.integers(1, den - 1))
    return Fraction(num, den)


@st.composite
def exact_orbits(draw, min_n=1, max_n=4, max_weight=9, max_t_den=16):
    n = draw(st.integers(min_n, max_n))
    return orbit_from_tanh_sq(
        n, rational_t(draw, max_t_den), rational_simplex(draw, n, max_weight)
    )


@st.composite
def orbit_mode_pairs(draw, min_n=1, max_n=4, max_entry=4, **kwargs):
    orbit = draw(exact_orbits(min_n=min_n, max_n=max_n, **kwargs))
    mode = draw(
        st.lists(
            st.integers(-max_entry, max_entry), min_size=orbit.n, max_size=orbit.n
        ).filter(any)
    )
    return orbit, tuple(mode)
