from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from delsarte.finite_field import EnumerationLimitError
from delsarte.inequality_constants import (cw_constants, delthm_rhs, maintr_rhs,
                                           matrix_balancing_max, matrix_balancing_max_bruteforce,
                                           max_pairwise_products, max_pairwise_products_bruteforce,
                                           ostergard_rhs, ostergard_terms, qt1_upper_bound)
from delsarte.polynomials import binomial


@pytest.mark.parametrize("M,h,expected", [(4, 2, 4), (5, 3, 8), (3, 1, 0), (0, 4, 0)])
def test_max_pairwise_products(M, h, expected):
    assert max_pairwise_products(M, h) == expected
    assert max_pairwise_products_bruteforce(M, h).value == expected


def test_bruteforce_reports_balance():
    bf = max_pairwise_products_bruteforce(4, 2)
    assert bf.balanced_only and bf.n_maximizers == 1
    with pytest.raises(EnumerationLimitError):
        max_pairwise_products_bruteforce(17, 2)


@pytest.mark.parametrize("args,expected", [((2, 2, 2, 1), 2), ((3, 4, 3, 1), 24)])
def test_qt1(args, expected):
    assert qt1_upper_bound(*args) == expected


@given(st.integers(2, 7), st.integers(1, 6), st.integers(1, 30))
def test_qt1_divisible_case_and_delthm_sign(q, n, m):
    M = q * m
    for k in range(1, n + 1):
        assert qt1_upper_bound(q, n, M, k) == Fraction((q - 1) ** (k + 1) * binomial(n, k) * M * M,
                                                       2 * q)
        assert delthm_rhs(q, n, M, k) == 0
        assert delthm_rhs(q, n, M + 1, k) > 0


def test_delthm_examples():
    assert delthm_rhs(3, 5, 4, 1) == Fraction(5, 2)
    assert delthm_rhs(2, 4, 3, 2) == 2


def test_cw_constants_examples():
    c = cw_constants(3, 4, 2, 3, 1)
    assert (c.q_k, c.r_k, c.s_k, c.t_k, c.s1_k, c.t1_k) == (1, 4, 0, 1, 1, 0)
    assert (c.T1, c.T2, c.T3, c.T) == (16, 0, 4, 20)
    c = cw_constants(2, 4, 2, 2, 1)
    assert (c.q_k, c.r_k, c.T1, c.T2, c.T3, c.T) == (1, 0, 4, 0, 0, 4)
    assert c.to_json()["T"] == "4"


@given(st.integers(2, 7), st.integers(1, 8), st.data())
def test_cw_constant_invariants(q, n, data):
    w = data.draw(st.integers(0, n))
    M = data.draw(st.integers(1, 40))
    for k in range(1, n + 1):
        c = cw_constants(q, n, w, M, k)
        assert 0 <= c.r_k < c.divisor
        assert 0 <= c.t_k < q - 1 or q == 2
        assert c.T1 >= 0 and c.T2 >= 0 and c.T3 >= 0
        assert c.q_k * c.divisor + c.r_k == c.dividend
        if q == 2:
            assert c.T2 == 0 == c.T3


def test_maintr_examples():
    assert maintr_rhs(2, 4, 2, 2, 1) == -4
    assert maintr_rhs(2, 4, 2, 3, 1) == Fraction(-8, 3)
    for q, n, w in product((2, 3, 5), (3, 5), (1, 2, 3)):
        for k in range(1, n + 1):
            assert maintr_rhs(q, n, w, 1, k) <= 0


def test_ostergard_examples():
    assert ostergard_rhs(3, 4, 2, 3) == 20
    ot = ostergard_terms(3, 4, 2, 3)
    assert (ot.quot, ot.t, ot.M_parts, ot.M_prime_parts) == (1, 2, (1, 1, 1), (2, 0, 1))
    assert ostergard_rhs(2, 4, 2, 2) == 8 == 2 * cw_constants(2, 4, 2, 2, 1).T


@given(st.integers(2, 7), st.integers(2, 10), st.data())
def test_ostergard_part_sums(q, n, data):
    w = data.draw(st.integers(1, n))
    M = data.draw(st.integers(1, 40))
    ot = ostergard_terms(q, n, w, M)
    assert sum(ot.M_parts[1:]) == ot.quot + 1 and sum(ot.M_prime_parts[1:]) == ot.quot
    assert sum(ot.M_parts) == M == sum(ot.M_prime_parts)
    assert max(ot.M_prime_parts[1:]) - min(ot.M_prime_parts[1:]) <= 1


def naive_matrix_max(M, Mp, q, N):
    cols = [c for c in product(range(M + 1), repeat=q) if sum(c) == M]
    best = None
    for mat in product(cols, repeat=N):
        if sum(M - c[0] for c in mat) != Mp:
            continue
        v = sum(c[a] * c[b] for c in mat for a in range(q) for b in range(a + 1, q))
        best = v if best is None else max(best, v)
    return best


@pytest.mark.parametrize("M,Mp,q,N", [(2, 2, 2, 2), (3, 4, 3, 2), (3, 0, 3, 2), (4, 5, 3, 2),
                                      (2, 3, 4, 2), (3, 4, 2, 3)])
def test_matrix_bruteforce_against_naive(M, Mp, q, N):
    bf = matrix_balancing_max_bruteforce(M, Mp, q, N)
    assert bf.value == naive_matrix_max(M, Mp, q, N) == matrix_balancing_max(M, Mp, q, N)
    assert bf.balanced_only


def test_matrix_examples():
    assert matrix_balancing_max_bruteforce(2, 2, 2, 2).value == 2
    assert matrix_balancing_max_bruteforce(3, 0, 3, 3).value == 0
    assert matrix_balancing_max_bruteforce(3, 4, 3, 2).value == 6
    with pytest.raises(EnumerationLimitError):
        matrix_balancing_max_bruteforce(9, 1, 2, 2)
    with pytest.raises(ValueError):
        matrix_balancing_max_bruteforce(2, 5, 2, 2)


def test_matrix_closed_form_is_T():
    # N = (q-1)^k C(n,k) columns and M' = the constant-weight dividend reproduce T(k)
    for q, n, w, M, k in [(3, 4, 2, 3, 1), (3, 3, 1, 4, 2), (5, 3, 2, 6, 1), (2, 5, 2, 4, 2)]:
        c = cw_constants(q, n, w, M, k)
        assert matrix_balancing_max(M, c.dividend, q, c.divisor) == c.T
