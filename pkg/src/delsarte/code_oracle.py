"""Explicit codes and the double-counting quantities behind the inequalities.

A :class:`Code` is an M x n matrix over {0, ..., q-1} with distinct rows.
For prime q the module evaluates

* S(k)   -- by walking column combinations ``alpha_1 u'_{i_1} + ...``
* S_1(k) -- by walking ordered row pairs (an independent path; S_1 = 2 S)
* S_0(k) -- by walking single rows of a constant-weight code

and checks every identity and inequality relating them to the distance
distribution.  Two enumeration strategies are kept deliberately disjoint so
that agreement is evidence, not a tautology.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product

import numpy as np

from .finite_field import ENUMERATION_GUARD, EnumerationLimitError, is_prime, nonzero_vectors
from .inequality_constants import cw_constants, delthm_rhs, maintr_rhs, qt1_upper_bound
from .polynomials import PolyParams, binomial, krawtchouk, pk_minus, pk_plus, scaled_pk_minus
from .rational import fmt_rational


@dataclass(frozen=True)
class Code:
    q: int
    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not rows:
            raise ValueError("a code needs at least one codeword")
        for r in rows:
            if len(r) != self.n:
                raise ValueError(f"row {r} has length {len(r)}, expected {self.n}")
            if any(not 0 <= c < self.q for c in r):
                raise ValueError(f"row {r} has symbols outside 0..{self.q - 1}")
        if len(set(rows)) != len(rows):
            raise ValueError("duplicate codewords")

    @classmethod
    def from_strings(cls, words, q=2):
        words = list(words)
        return cls(q, len(words[0]), tuple(tuple(int(ch, 36) for ch in w) for w in words))

    @property
    def M(self):
        return len(self.rows)

    @cached_property
    def array(self):
        a = np.array(self.rows, dtype=np.int64)
        a.setflags(write=False)
        return a

    def weights(self):
        return [sum(1 for c in r if c) for r in self.rows]

    def constant_weight(self):
        """The common weight of all rows, or None."""
        ws = set(self.weights())
        return ws.pop() if len(ws) == 1 else None

    def min_distance(self):
        if self.M < 2:
            return None
        return min(hamming_distance(u, v) for u, v in combinations(self.rows, 2))

    def label(self):
        return "|".join("".join(np.base_repr(c, 36) for c in r) for r in self.rows)


@dataclass(frozen=True)
class DistanceDistribution:
    M: int
    B: tuple

    def __post_init__(self):
        if self.B[0] != 1:
            raise ValueError("B_0 must be 1")
        if any(b < 0 for b in self.B):
            raise ValueError("negative B_i")
        if sum(self.B) != self.M:
            raise ValueError("distance distribution must sum to M")


def hamming_distance(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def distance_distribution(C):
    a = C.array
    d = (a[:, None, :] != a[None, :, :]).sum(axis=2)
    counts = np.bincount(d.ravel(), minlength=C.n + 1)
    return DistanceDistribution(C.M, tuple(Fraction(int(c), C.M) for c in counts))


def symbol_counts(column, q):
    """x_1..x_q for a column vector over {0..q-1} (x_1 counts the zero symbol)."""
    return tuple(int(c) for c in np.bincount(np.asarray(column) % q, minlength=q))


def _require_prime(C, k):
    if not is_prime(C.q):
        raise ValueError(f"q = {C.q} is not prime; the oracle works over prime fields only")
    if not 1 <= k <= C.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={C.n}")
    size = (C.q - 1) ** k * binomial(C.n, k)
    if size > ENUMERATION_GUARD:
        raise EnumerationLimitError(f"(q-1)^k C(n,k) = {size} exceeds {ENUMERATION_GUARD}")


@lru_cache(maxsize=4096)
def s_of_k_direct(C, k):
    """S(k) by forming every combined column alpha . (u'_{i_1}, ..., u'_{i_k})."""
    _require_prime(C, k)
    alphas = nonzero_vectors(C.q, k).T
    total = 0
    M2 = C.M * C.M
    for cols in combinations(range(C.n), k):
        combo = (C.array[:, cols] @ alphas) % C.q
        sq = sum(np.count_nonzero(combo == c, axis=0) ** 2 for c in range(C.q))
        total += int((M2 - sq).sum()) // 2
    return total


def s1_of_k_paircount(C, k):
    """S_1(k): (ordered row pair, column subset, alpha) triples with alpha.(u-v) != 0."""
    _require_prime(C, k)
    if C.M < 2:
        return 0
    alphas = nonzero_vectors(C.q, k).T
    m, l = np.nonzero(~np.eye(C.M, dtype=bool))
    diffs = (C.array[m] - C.array[l]) % C.q
    total = 0
    for cols in combinations(range(C.n), k):
        total += int(np.count_nonzero((diffs[:, cols] @ alphas) % C.q))
    return total


def _require_weight(C, w):
    bad = [wt for wt in C.weights() if wt != w]
    if bad:
        raise ValueError(f"code is not constant-weight {w} (found weight {bad[0]})")


def s0_of_k_paircount(C, w, k):
    """S_0(k): (row, column subset, alpha) triples with alpha . row_subset != 0."""
    _require_weight(C, w)
    _require_prime(C, k)
    alphas = nonzero_vectors(C.q, k).T
    total = 0
    for m in range(C.M):
        row = C.array[m]
        for cols in combinations(range(C.n), k):
            total += int(np.count_nonzero((row[list(cols)] @ alphas) % C.q))
    return total


def nonzero_column_mass(C, k):
    """Sum over combined columns of the number of nonzero entries (column walk)."""
    _require_prime(C, k)
    alphas = nonzero_vectors(C.q, k).T
    return sum(int(np.count_nonzero((C.array[:, cols] @ alphas) % C.q))
               for cols in combinations(range(C.n), k))


# -- corpus generation -------------------------------------------------------

def _decode(index, q, n):
    word = []
    for _ in range(n):
        index, c = divmod(index, q)
        word.append(c)
    return tuple(reversed(word))


def cw_space_size(q, n, w):
    return binomial(n, w) * (q - 1) ** w


def random_code(q, n, M, seed):
    """Uniform M-subset of F_q^n drawn with numpy's PCG64 generator seeded by ``seed``."""
    if not 1 <= M <= q ** n:
        raise ValueError(f"need 1 <= M <= q^n = {q ** n}, got M={M}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(q ** n, size=M, replace=False)
    return Code(q, n, tuple(sorted(_decode(int(i), q, n) for i in idx)))


def random_cw_code(q, n, w, M, seed):
    """Uniform M-subset of the weight-w words of F_q^n (sequential rejection of repeats)."""
    if not 0 <= w <= n:
        raise ValueError(f"need 0 <= w <= n, got w={w}")
    if not 1 <= M <= cw_space_size(q, n, w):
        raise ValueError(f"need 1 <= M <= {cw_space_size(q, n, w)}, got M={M}")
    rng = np.random.default_rng(seed)
    words = set()
    while len(words) < M:
        support = rng.choice(n, size=w, replace=False)
        symbols = rng.integers(1, q, size=w)
        word = [0] * n
        for i, s in zip(support, symbols):
            word[int(i)] = int(s)
        words.add(tuple(word))
    return Code(q, n, tuple(sorted(words)))


def word_space(q, n, w=None):
    words = product(range(q), repeat=n)
    if w is None:
        return list(words)
    return [u for u in words if sum(1 for c in u if c) == w]


def enumerate_all_codes(q, n, M, w=None):
    """Every M-subset of F_q^n (or of its weight-w layer), each exactly once."""
    size = q ** n if w is None else cw_space_size(q, n, w)
    if size > 32:
        raise EnumerationLimitError(f"word space of {size} words exceeds the guard of 32")
    words = word_space(q, n, w)
    if not 1 <= M <= len(words):
        raise ValueError(f"need 1 <= M <= {len(words)}, got M={M}")
    for subset in combinations(words, M):
        yield Code(q, n, subset)


def max_code_size(q, n, d, w=None, node_limit=10**5):
    """Exact largest code with minimum distance >= d, by branch and bound.

    Raises EnumerationLimitError when more than ``node_limit`` search nodes
    would be needed.  Without a weight restriction the code is translated so
    that it contains the zero word.
    """
    words = word_space(q, n, w)
    if not words:
        return 0
    if d <= 1:
        return len(words)
    if len(words) > 4096:
        raise EnumerationLimitError(f"word space of {len(words)} words is too large")
    arr = np.array(words, dtype=np.int8)
    adj = []
    for u in arr:
        far = (arr != u).sum(axis=1) >= d
        # bit j of the mask is word j
        adj.append(int.from_bytes(np.packbits(far, bitorder="little").tobytes(), "little"))
    best = 1
    nodes = 0
    stack = []

    def enter(cand, size):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_limit:
            raise EnumerationLimitError(f"search exceeded {node_limit} nodes")
        best = max(best, size)
        stack.append([cand, size])

    if w is None:
        enter(adj[0], 1)
    else:
        enter((1 << len(words)) - 1, 0)
    while stack:
        frame = stack[-1]
        cand, size = frame
        if not cand or size + bin(cand).count("1") <= best:
            stack.pop()
            continue
        j = cand.bit_length() - 1
        frame[0] = cand & ~(1 << j)
        enter(cand & adj[j], size + 1)
    return best


# -- verification ------------------------------------------------------------

_RELATIONS = {
    "==": lambda a, e: a == e,
    "<=": lambda a, e: a <= e,
    ">=": lambda a, e: a >= e,
}


@dataclass(frozen=True)
class CheckResult:
    check: str
    params: dict
    relation: str
    expected: Fraction
    actual: Fraction
    passed: bool

    def to_json(self):
        params = dict(self.params)
        params["relation"] = self.relation
        return {
            "check": self.check,
            "params": params,
            "expected": fmt_rational(self.expected),
            "actual": fmt_rational(self.actual),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    def add(self, check, params, relation, expected, actual):
        expected, actual = Fraction(expected), Fraction(actual)
        ok = _RELATIONS[relation](actual, expected)
        self.results.append(CheckResult(check, dict(params), relation, expected, actual, ok))

    def extend(self, other):
        self.results.extend(other.results)
        return self

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def counts(self):
        """{check name: (passed, total)} in sorted order."""
        out = {}
        for r in self.results:
            p, t = out.get(r.check, (0, 0))
            out[r.check] = (p + r.passed, t + 1)
        return dict(sorted(out.items()))

    def to_json(self):
        return [r.to_json() for r in self.results]

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def _base_params(C, k, w):
    params = {"q": C.q, "n": C.n, "M": C.M, "k": k, "code": C.label()}
    if w is not None:
        params["w"] = w
    return params


def verify_identities(C, w=None):
    """Exact double-counting identities for every k = 1..n."""
    report = VerificationReport()
    q, n, M = C.q, C.n, C.M
    B = distance_distribution(C).B
    for k in range(1, n + 1):
        params = _base_params(C, k, w)
        S = s_of_k_direct(C, k)
        report.add("pair_count_double", params, "==", 2 * S, s1_of_k_paircount(C, k))
        scaled_S = Fraction(q, (q - 1) * M) * S
        minus = sum(pk_minus(PolyParams(q, n, k, i)) * B[i] for i in range(1, n + 1))
        plus = sum(pk_plus(PolyParams(q, n, k, i)) * B[i] for i in range(1, n + 1))
        report.add("split_minus_sum", params, "==", scaled_S, minus)
        report.add("split_plus_sum", params, "==",
                   (M - 1) * (q - 1) ** k * binomial(n, k) - scaled_S, plus)
        if w is not None:
            closed = M * scaled_pk_minus(PolyParams(q, n, k, w))
            report.add("cw_row_count", params, "==", closed, s0_of_k_paircount(C, w, k))
            report.add("cw_column_mass", params, "==", closed, nonzero_column_mass(C, k))
    return report


def verify_inequalities(C, w=None):
    """Every inequality for every k, compared exactly."""
    report = VerificationReport()
    q, n, M = C.q, C.n, C.M
    B = distance_distribution(C).B
    for k in range(1, n + 1):
        params = _base_params(C, k, w)
        S = s_of_k_direct(C, k)
        report.add("s_upper_bound", params, "<=", qt1_upper_bound(q, n, M, k), S)
        kraw = [krawtchouk(PolyParams(q, n, k, i)) for i in range(n + 1)]
        full = sum(kraw[i] * B[i] for i in range(n + 1))
        report.add("improved_delsarte", params, ">=", delthm_rhs(q, n, M, k), full)
        if w is not None:
            report.add("cw_s_upper_bound", params, "<=", cw_constants(q, n, w, M, k).T, S)
            report.add("cw_inequality", params, ">=", maintr_rhs(q, n, w, M, k), full - kraw[0])
    return report
