"""Dual-track scalar policy.

Certified verdicts require exact rational arithmetic; parameter sweeps and
quadrature run in binary floating point.  A scalar is "exact" when it is an
int or a Fraction; anything else is treated as a float.  Exactness of a
collection decides the arithmetic track of the objects built from it.
"""

from __future__ import annotations

from fractions import Fraction

EXACT = "exact"
FLOAT = "float"

#: tolerance for simplex normalization on the float track
SIMPLEX_TOL = 1e-12


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(xs) -> bool:
    return all(is_exact(x) for x in xs)


def parse_scalar(token: str):
    """Parse a CLI scalar: 'p/q' or an integer stays exact, decimals go float.

    The syntax decides the track: certification needs exact inputs, so the
    notation has to make the choice visible.
    """
    token = token.strip()
    if "/" in token:
        num, den = token.split("/", 1)
        return Fraction(int(num), int(den))
    if "." in token or "e" in token.lower():
        return float(token)
    return Fraction(int(token))


def format_scalar(x) -> str:
    """Inverse of parse_scalar, used by the serializers."""
    if is_exact(x):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return repr(float(x))
