"""Seeded verification suites over generated codes and parameter grids.

Each suite returns a :class:`VerificationReport`.  All randomness comes from
``numpy.random.default_rng(seed)`` (PCG64), and results are appended in
generation order, so a report is a pure function of its arguments.
"""
from fractions import Fraction
from itertools import product

import numpy as np

from .code_oracle import (VerificationReport, cw_space_size, random_code, random_cw_code,
                          verify_identities, verify_inequalities)
from .finite_field import NonzeroVector, count_nonzero_dot, count_zero_dot, prop21_closed_form
from .inequality_constants import (cw_constants, matrix_balancing_max,
                                   matrix_balancing_max_bruteforce, max_pairwise_products,
                                   max_pairwise_products_bruteforce, ostergard_rhs,
                                   ostergard_terms)


def sample_codes(qs, n_min, n_max, size_max, samples, seed):
    """Yield ``samples`` random codes; parameters and code seeds drawn from one generator."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        q = int(qs[rng.integers(len(qs))])
        n = int(rng.integers(n_min, n_max + 1))
        M = int(rng.integers(2, min(size_max, q ** n) + 1))
        yield random_code(q, n, M, int(rng.integers(2**63)))


def sample_cw_codes(qs, n_min, n_max, size_max, samples, seed):
    """Yield ``(code, w)`` pairs of random constant-weight codes with at least two words."""
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < samples:
        q = int(qs[rng.integers(len(qs))])
        n = int(rng.integers(n_min, n_max + 1))
        w = int(rng.integers(1, n + 1))
        space = cw_space_size(q, n, w)
        if space < 2:
            continue
        M = int(rng.integers(2, min(size_max, space) + 1))
        yield random_cw_code(q, n, w, M, int(rng.integers(2**63))), w
        produced += 1


def delsarte_suite(qs=(2, 3, 5), n_max=7, size_max=10, samples=500, seed=0, n_min=2):
    report = VerificationReport()
    for C in sample_codes(qs, n_min, n_max, size_max, samples, seed):
        report.extend(verify_identities(C))
        report.extend(verify_inequalities(C))
    return report


def cw_suite(qs=(2, 3, 5), n_max=7, size_max=10, samples=500, seed=0, n_min=2):
    report = VerificationReport()
    for C, w in sample_cw_codes(qs, n_min, n_max, size_max, samples, seed):
        report.extend(verify_identities(C, w))
        report.extend(verify_inequalities(C, w))
    return report


def prop21_suite(ps=(2, 3, 5, 7), j_max=4):
    """Every a in (F_p^*)^j, j <= j_max: enumerated counts against the closed forms."""
    report = VerificationReport()
    for p in ps:
        for j in range(1, j_max + 1):
            N, Z = prop21_closed_form(p, j)
            for a in product(range(1, p), repeat=j):
                vec = NonzeroVector(p, a)
                params = {"p": p, "j": j, "a": ",".join(map(str, a))}
                report.add("nonzero_dot_count", params, "==", N, count_nonzero_dot(vec))
                report.add("zero_dot_count", params, "==", Z, count_zero_dot(vec))
    return report


def balance_suite(M_max=16, h_max=5, q_max=4, N_max=4, matrix_M_max=8):
    """Balanced-partition maxima: closed forms against exhaustive search."""
    report = VerificationReport()
    for M in range(M_max + 1):
        for h in range(1, h_max + 1):
            bf = max_pairwise_products_bruteforce(M, h)
            params = {"M": M, "h": h}
            report.add("partition_max", params, "==", max_pairwise_products(M, h), bf.value)
            report.add("partition_maximizers_balanced", params, "==", 1, int(bf.balanced_only))
    for q in range(2, q_max + 1):
        for N in range(1, N_max + 1):
            for M in range(matrix_M_max + 1):
                for Mp in range(N * M + 1):
                    bf = matrix_balancing_max_bruteforce(M, Mp, q, N)
                    params = {"M": M, "Mprime": Mp, "q": q, "N": N}
                    report.add("matrix_max", params, "==",
                               matrix_balancing_max(M, Mp, q, N), bf.value)
                    report.add("matrix_maximizers_balanced", params, "==", 1,
                               int(bf.balanced_only))
    return report


def ostergard_suite(q_range=range(2, 8), n_range=range(2, 11), M_range=range(2, 41)):
    """(2/(q-1)) T(1) from the general constants against the k = 1 closed form."""
    report = VerificationReport()
    for q in q_range:
        for n in n_range:
            for w in range(1, n + 1):
                for M in M_range:
                    T = cw_constants(q, n, w, M, 1).T
                    ot = ostergard_terms(q, n, w, M)
                    params = {"q": q, "n": n, "w": w, "M": M}
                    report.add("ostergard_equivalence", params, "==",
                               ostergard_rhs(q, n, w, M), Fraction(2 * T, q - 1))
                    report.add("ostergard_part_sums", params, "==", 2 * M,
                               sum(ot.M_parts) + sum(ot.M_prime_parts))
    return report


SUITES = {
    "delsarte": delsarte_suite,
    "cw": cw_suite,
    "prop21": prop21_suite,
    "balance": balance_suite,
    "ostergard": ostergard_suite,
}
