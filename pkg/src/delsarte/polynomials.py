"""Binomials, Krawtchouk polynomials and their nonnegative split.

Everything here is exact: integers where the value is integral, Fractions
otherwise.  The split polynomials satisfy

    pk_plus + pk_minus == (q-1)**k * C(n, k)
    pk_plus - pk_minus == krawtchouk
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class PolyParams:
    q: int
    n: int
    k: int
    x: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size q must be >= 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"length n must be >= 1, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"degree k must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")
        if not 0 <= self.x <= self.n:
            raise ValueError(f"point x must satisfy 0 <= x <= n, got x={self.x}, n={self.n}")


def binomial(a, b):
    """C(a, b), and 0 whenever b < 0, b > a or a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def _krawtchouk(q, n, k, x):
    return sum((-1) ** j * (q - 1) ** (k - j) * binomial(x, j) * binomial(n - x, k - j)
               for j in range(k + 1))


@lru_cache(maxsize=None)
def _scaled_minus(q, n, k, x):
    total = 0
    for j in range(k + 1):
        bracket = (q - 1) ** j - (-1) ** j
        if bracket % q:
            raise ArithmeticError(f"(q-1)^j - (-1)^j not divisible by q (q={q}, j={j})")
        total += (bracket // q) * (q - 1) ** (k - j) * binomial(x, j) * binomial(n - x, k - j)
    return (q - 1) * total


def krawtchouk(p):
    """P_k(n; x) for the q-ary Hamming scheme."""
    return _krawtchouk(p.q, p.n, p.k, p.x)


@lru_cache(maxsize=None)
def _pk_minus(q, n, k, x):
    s = sum(((q - 1) ** j - (-1) ** j) * (q - 1) ** (k - j) * binomial(x, j) * binomial(n - x, k - j)
            for j in range(k + 1))
    return Fraction(s, 2)


def pk_minus(p):
    """The lower half of the split, a nonnegative rational with denominator 1 or 2."""
    return _pk_minus(p.q, p.n, p.k, p.x)


def pk_plus(p):
    return (p.q - 1) ** p.k * binomial(p.n, p.k) - pk_minus(p)


def scaled_pk_minus(p):
    """Integer ``2(q-1)/q * pk_minus(p)``.

    Each bracket (q-1)^j - (-1)^j is divisible by q; a non-divisible bracket
    raises ArithmeticError (it never should).
    """
    return _scaled_minus(p.q, p.n, p.k, p.x)


def krawtchouk_row(q, n, k):
    """[P_k(n; 0), ..., P_k(n; n)]."""
    return [_krawtchouk(q, n, k, x) for x in range(n + 1)]


def kraw_table(q, n):
    """Rows (k, x, P_k, P_k^-, P_k^+) for 1 <= k <= n, 0 <= x <= n."""
    rows = []
    for k in range(1, n + 1):
        for x in range(n + 1):
            p = PolyParams(q, n, k, x)
            rows.append((k, x, krawtchouk(p), pk_minus(p), pk_plus(p)))
    return rows
