"""Right-hand sides of the Delsarte-type inequalities and their constants.

Covers the balanced-partition maxima (scalar and matrix versions, each with
an exhaustive counterpart), the upper bound on S(k) for arbitrary codes, the
improved Delsarte right-hand side, the constant-weight constant set
(q_k, r_k, s_k, t_k, s'_k, t'_k, T1, T2, T3) and the equivalent closed form
for k = 1 due to Ostergard.

All divisions are Euclidean: ``divmod`` with a nonnegative remainder.
"""
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import product

from .finite_field import EnumerationLimitError
from .polynomials import PolyParams, binomial, pk_minus, scaled_pk_minus


def _check_qnk(q, n, k):
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")


def _pair_sum(parts):
    total = sum(parts)
    return (total * total - sum(x * x for x in parts)) // 2


def max_pairwise_products(M, h):
    """Largest sum_{c<d} n_c n_d over n_1 + ... + n_h = M, n_c >= 0."""
    if M < 0 or h < 1:
        raise ValueError(f"need M >= 0 and h >= 1, got M={M}, h={h}")
    s, rho = divmod(M, h)
    return (binomial(h - rho, 2) * s * s + (h - rho) * rho * s * (s + 1)
            + binomial(rho, 2) * (s + 1) ** 2)


@dataclass(frozen=True)
class BruteForceMax:
    value: int
    balanced_only: bool
    n_maximizers: int


def _compositions(M, h):
    if h == 1:
        yield (M,)
        return
    for first in range(M + 1):
        for rest in _compositions(M - first, h - 1):
            yield (first,) + rest


def _is_balanced(parts):
    return not parts or max(parts) - min(parts) <= 1


def max_pairwise_products_bruteforce(M, h):
    """Exhaustive maximum over all compositions of M into h parts (M <= 16, h <= 5)."""
    if M > 16 or h > 5:
        raise EnumerationLimitError(f"guard is M <= 16, h <= 5; got M={M}, h={h}")
    if M < 0 or h < 1:
        raise ValueError(f"need M >= 0 and h >= 1, got M={M}, h={h}")
    best, maximizers = None, []
    for parts in _compositions(M, h):
        v = _pair_sum(parts)
        if best is None or v > best:
            best, maximizers = v, [parts]
        elif v == best:
            maximizers.append(parts)
    return BruteForceMax(best, all(_is_balanced(p) for p in maximizers), len(maximizers))


def qt1_upper_bound(q, n, M, k):
    """Upper bound on S(k) valid for every q-ary code of length n and size M."""
    _check_qnk(q, n, k)
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    r = M % q
    per_column = Fraction(q - 1, 2 * q) * M * M + Fraction(r * (r - q), 2 * q)
    return (q - 1) ** k * binomial(n, k) * per_column


def delthm_rhs(q, n, M, k):
    """Right-hand side of the improved Delsarte inequality sum_{i>=0} P_k B_i >= rhs."""
    _check_qnk(q, n, k)
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    r = M % q
    return Fraction(r * (q - r) * (q - 1) ** (k - 1) * binomial(n, k), M)


def _balanced_rest(s, t, q):
    # pair products among q-1 parts: t parts of size s+1, the rest of size s
    return (binomial(q - 1 - t, 2) * s * s + (q - 1 - t) * t * s * (s + 1)
            + binomial(t, 2) * (s + 1) ** 2)


@dataclass(frozen=True)
class CWConstantSet:
    q: int
    n: int
    w: int
    M: int
    k: int
    dividend: int
    divisor: int
    q_k: int
    r_k: int
    s_k: int
    t_k: int
    s1_k: int
    t1_k: int
    T1: int
    T2: int
    T3: int

    @property
    def T(self):
        return self.T1 + self.T2 + self.T3

    def to_json(self):
        out = {f.name: str(getattr(self, f.name)) for f in fields(self)}
        out["T"] = str(self.T)
        return out


def cw_constants(q, n, w, M, k):
    """The constant set bounding S(k) for a constant-weight code.

    The dividend ``2(q-1)M/q * P_k^-(n; w)`` is taken as the exact integer
    ``M * scaled_pk_minus``; it is split by ``(q-1)^k C(n,k)`` into (q_k, r_k),
    then q_k and q_k + 1 are each split by q - 1.
    """
    _check_qnk(q, n, k)
    if not 0 <= w <= n:
        raise ValueError(f"need 0 <= w <= n, got w={w}, n={n}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    p = PolyParams(q, n, k, w)
    dividend = M * scaled_pk_minus(p)
    if Fraction(2 * (q - 1) * M, q) * pk_minus(p) != dividend:
        raise ArithmeticError("scaled P_k^- disagrees with the rational value")
    divisor = (q - 1) ** k * binomial(n, k)
    q_k, r_k = divmod(dividend, divisor)
    s_k, t_k = divmod(q_k, q - 1)
    s1_k, t1_k = divmod(q_k + 1, q - 1)
    T1 = (divisor - r_k) * (M - q_k) * q_k + r_k * (M - q_k - 1) * (q_k + 1)
    T2 = (divisor - r_k) * _balanced_rest(s_k, t_k, q)
    T3 = r_k * _balanced_rest(s1_k, t1_k, q)
    return CWConstantSet(q, n, w, M, k, dividend, divisor,
                         q_k, r_k, s_k, t_k, s1_k, t1_k, T1, T2, T3)


def maintr_rhs(q, n, w, M, k):
    """Right-hand side of sum_{i>=1} P_k(n; i) B_i >= rhs for constant-weight codes."""
    T = cw_constants(q, n, w, M, k).T
    return (M - 1) * (q - 1) ** k * binomial(n, k) - Fraction(2 * q, (q - 1) * M) * T


@dataclass(frozen=True)
class OstergardTerms:
    quot: int
    t: int
    M_parts: tuple
    M_prime_parts: tuple


def ostergard_terms(q, n, w, M):
    quot, t = divmod(M * w, n)
    M_parts = (M - quot - 1,) + tuple((quot + i) // (q - 1) for i in range(1, q))
    M_prime_parts = (M - quot,) + tuple((quot + i - 1) // (q - 1) for i in range(1, q))
    return OstergardTerms(quot, t, M_parts, M_prime_parts)


def ostergard_rhs(q, n, w, M):
    """Upper bound on M(M-1)d for constant-weight codes, stated via OstergardTerms."""
    if q < 2 or not 1 <= w <= n or M < 1:
        raise ValueError(f"invalid parameters q={q}, n={n}, w={w}, M={M}")
    ot = ostergard_terms(q, n, w, M)
    return 2 * ot.t * _pair_sum(ot.M_parts) + 2 * (n - ot.t) * _pair_sum(ot.M_prime_parts)


def matrix_balancing_max(M, Mprime, q, N):
    """Balanced-matrix maximum of sum_i sum_{c<d} n_ci n_di.

    The matrix is q x N with column sums M and sum of rows 2..q equal to
    Mprime.  Same assembly as T1 + T2 + T3 with N columns.
    """
    if not 0 <= Mprime <= N * M:
        raise ValueError(f"Mprime must lie in [0, N*M], got {Mprime}")
    qq, rr = divmod(Mprime, N)
    col = lambda s: (M - s) * s + max_pairwise_products(s, q - 1)
    total = (N - rr) * col(qq)
    if rr:
        total += rr * col(qq + 1)
    return total


def matrix_balancing_max_bruteforce(M, Mprime, q, N):
    """Exhaustive maximum over all admissible q x N matrices (q <= 4, N <= 4, M <= 8).

    Every column composition is enumerated; the objective is separable across
    columns, so the enumeration is organised as (per-column table) x (all
    tuples of non-first-row column sums) without dropping any matrix.
    """
    if q > 4 or N > 4 or M > 8:
        raise EnumerationLimitError(f"guard is q <= 4, N <= 4, M <= 8; got q={q}, N={N}, M={M}")
    if q < 2 or N < 1 or M < 0:
        raise ValueError(f"invalid parameters M={M}, q={q}, N={N}")
    if not 0 <= Mprime <= N * M:
        raise ValueError(f"Mprime must lie in [0, N*M], got {Mprime}")
    # per non-first-row sum s: best column value, and whether all best columns are balanced
    table = {}
    for col in _compositions(M, q):
        s = M - col[0]
        v = _pair_sum(col)
        best = table.get(s)
        if best is None or v > best[0]:
            table[s] = [v, _is_balanced(col[1:])]
        elif v == best[0]:
            best[1] = best[1] and _is_balanced(col[1:])
    best, balanced, count = None, True, 0
    for sums in product(range(M + 1), repeat=N):
        if sum(sums) != Mprime:
            continue
        v = sum(table[s][0] for s in sums)
        ok = max(sums) - min(sums) <= 1 and all(table[s][1] for s in sums)
        if best is None or v > best:
            best, balanced, count = v, ok, 1
        elif v == best:
            balanced = balanced and ok
            count += 1
    return BruteForceMax(best, balanced, count)
