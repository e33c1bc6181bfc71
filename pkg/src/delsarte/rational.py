"""Helpers for moving exact rationals across module boundaries.

Public results are always :class:`fractions.Fraction`.  Hot loops (the
simplex tableau) may run on ``gmpy2.mpq`` and convert on the way out.
"""
from fractions import Fraction

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

fast_rational = _mpq


def to_fraction(x):
    """Convert an int, Fraction or mpq to a Fraction without loss."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


def fmt_rational(x):
    """Render ``x`` as a ``"p/q"`` string (denominator always present)."""
    f = to_fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s):
    return Fraction(s)
