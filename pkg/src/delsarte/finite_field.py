"""Prime-field arithmetic and exhaustive inner-product counts.

Only prime moduli are supported.  The closed forms for N(a) and Z(a) depend
on q and the vector length alone, so prime fields are enough to exercise
them exhaustively.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

ENUMERATION_GUARD = 10**7


class EnumerationLimitError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size cap."""


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def is_prime_power(q):
    if q < 2:
        return False
    p = 2
    while q % p:
        p += 1
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def dot(self, a, b):
        return sum(x * y for x, y in zip(a, b)) % self.p

    def nonzero(self):
        return range(1, self.p)


@dataclass(frozen=True)
class NonzeroVector:
    p: int
    entries: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) < 1:
            raise ValueError("vector must have length >= 1")
        if any(not 1 <= e < self.p for e in self.entries):
            raise ValueError(f"entries must lie in 1..{self.p - 1}: {self.entries}")

    def __len__(self):
        return len(self.entries)


def nonzero_vectors(p, j):
    """All of (F_p^*)^j as a ``((p-1)**j, j)`` integer array, lexicographic."""
    if (p - 1) ** j > ENUMERATION_GUARD:
        raise EnumerationLimitError(f"(p-1)^j = {(p - 1) ** j} exceeds {ENUMERATION_GUARD}")
    if j == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(range(1, p), repeat=j)), dtype=np.int64)


def _dots(a):
    return (nonzero_vectors(a.p, len(a)) @ np.array(a.entries, dtype=np.int64)) % a.p


def count_nonzero_dot(a):
    """N(a): number of b in (F_p^*)^j with a.b != 0, by enumeration."""
    return int(np.count_nonzero(_dots(a)))


def count_zero_dot(a):
    """Z(a): number of b in (F_p^*)^j with a.b == 0, by enumeration."""
    return int(np.count_nonzero(_dots(a) == 0))


def prop21_closed_form(q, j):
    """Closed forms (N, Z) for vectors of length j over a field of size q."""
    if q < 2 or j < 1:
        raise ValueError(f"need q >= 2 and j >= 1, got q={q}, j={j}")
    bracket = (q - 1) ** j - (-1) ** j
    if bracket % q:
        raise ArithmeticError(f"(q-1)^j - (-1)^j not divisible by q (q={q}, j={j})")
    n_val = (q - 1) * (bracket // q)
    return Fraction(n_val), Fraction((q - 1) ** j - n_val)
