from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from delsarte.polynomials import (PolyParams, binomial, kraw_table, krawtchouk, pk_minus,
                                  pk_plus, scaled_pk_minus)


def kraw_recurrence(q, n, k, x):
    """Independent oracle: three-term recurrence in the degree."""
    prev, cur = 1, (q - 1) * n - q * x
    if k == 0:
        return prev
    for j in range(1, k):
        prev, cur = cur, Fraction(((q - 1) * (n - j) + j - q * x) * cur
                                  - (q - 1) * (n - j + 1) * prev, j + 1)
    return cur


params = st.integers(2, 7).flatmap(
    lambda q: st.integers(1, 9).flatmap(
        lambda n: st.tuples(st.just(q), st.just(n), st.integers(1, n), st.integers(0, n))))


@pytest.mark.parametrize("a,b,expected", [(4, 2, 6), (3, 5, 0), (5, 0, 1), (-1, 0, 0), (4, -1, 0)])
def test_binomial(a, b, expected):
    assert binomial(a, b) == expected


@pytest.mark.parametrize("q,n,k,x,expected", [(3, 4, 1, 2, 2), (3, 4, 2, 0, 24), (2, 4, 2, 1, 0)])
def test_krawtchouk_examples(q, n, k, x, expected):
    assert krawtchouk(PolyParams(q, n, k, x)) == expected


def test_krawtchouk_zero_example_against_recurrence():
    assert kraw_recurrence(2, 4, 2, 1) == 0


@pytest.mark.parametrize("q,n,k,x,minus,plus,scaled", [
    (3, 4, 1, 2, 3, 5, 4),
    (2, 4, 2, 1, 3, 3, 3),
])
def test_split_examples(q, n, k, x, minus, plus, scaled):
    p = PolyParams(q, n, k, x)
    assert pk_minus(p) == minus
    assert pk_plus(p) == plus
    assert scaled_pk_minus(p) == scaled


def test_binary_minus_is_odd_j_sum():
    # q = 2: the bracket is 2 for odd j, 0 for even j
    for n in range(1, 8):
        for k in range(1, n + 1):
            for x in range(n + 1):
                direct = sum(binomial(x, j) * binomial(n - x, k - j) for j in range(1, k + 1, 2))
                assert pk_minus(PolyParams(2, n, k, x)) == direct


@pytest.mark.parametrize("bad", [(1, 4, 1, 0), (2, 0, 1, 0), (2, 4, 0, 0), (2, 4, 5, 0),
                                 (2, 4, 1, 5), (2, 4, 1, -1)])
def test_params_rejected(bad):
    with pytest.raises(ValueError):
        PolyParams(*bad)


@given(params)
def test_krawtchouk_matches_recurrence(t):
    assert krawtchouk(PolyParams(*t)) == kraw_recurrence(*t)


@given(params)
def test_split_identities(t):
    q, n, k, x = t
    p = PolyParams(*t)
    total = (q - 1) ** k * binomial(n, k)
    assert pk_plus(p) + pk_minus(p) == total
    assert pk_plus(p) - pk_minus(p) == krawtchouk(p)
    assert pk_minus(p) >= 0 and pk_plus(p) >= 0
    assert pk_minus(p).denominator in (1, 2)
    assert Fraction(2 * (q - 1), q) * pk_minus(p) == scaled_pk_minus(p) >= 0
    assert krawtchouk(PolyParams(q, n, 1, x)) == (q - 1) * n - q * x
    if q == 2:
        assert pk_minus(p).denominator == 1


@given(st.integers(2, 9), st.integers(1, 9))
def test_minus_vanishes_at_zero(q, n):
    for k in range(1, n + 1):
        p = PolyParams(q, n, k, 0)
        assert pk_minus(p) == 0 == scaled_pk_minus(p)
        assert pk_plus(p) == (q - 1) ** k * binomial(n, k)


def test_kraw_table_shape():
    rows = kraw_table(2, 4)
    assert len(rows) == 4 * 5
    assert (2, 1, 0, 3, 3) in rows
