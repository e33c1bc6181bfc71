"""Linear programs over distance distributions and the bound drivers.

Variables are the B_i for the distances a code may realise (B_0 = 1 is
moved to the right-hand side).  Three families of rows are available:

* classical   -- sum_i P_k(n; i) B_i >= 0
* improved    -- the same with the positive right-hand side for q not dividing M
* constant-weight -- sum_{i>=1} P_k(n; i) B_i >= (M-1)(q-1)^k C(n,k) - 2q T(k) / ((q-1) M)

The classical bound is the LP optimum.  The M-dependent families are used in
a feasibility scan: M = 2, 3, ... is tested in ascending order and the first
infeasible M gives the bound M - 1.  Code existence is monotone in M even
though LP feasibility need not be, so the scan never skips ahead.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor

from .finite_field import is_prime_power
from .inequality_constants import delthm_rhs, maintr_rhs
from .polynomials import krawtchouk_row
from .rational import fmt_rational
from .simplex import DEFAULT_PIVOT_LIMIT, LinearSystem, WarmStart, simplex_solve


@lru_cache(maxsize=None)
def _kraw(q, n):
    return {k: tuple(Fraction(v) for v in krawtchouk_row(q, n, k)) for k in range(1, n + 1)}


@lru_cache(maxsize=4096)
def _rows(q, n, indices):
    """Krawtchouk coefficient rows restricted to ``indices``, shared across systems."""
    kraw = _kraw(q, n)
    return {k: tuple(kraw[k][i] for i in indices) for k in kraw}


def _check(q, n, d):
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if n < 1 or not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")


def _system(q, n, indices, rhs_of_k, objective=True):
    indices = tuple(indices)
    kraw, rows = _kraw(q, n), _rows(q, n, indices)
    sys = LinearSystem(tuple(f"B{i}" for i in indices),
                       objective=(1,) * len(indices) if objective else None)
    for k in range(1, n + 1):
        sys.add(rows[k], ">=", rhs_of_k(k, kraw[k]), f"k={k}")
    return sys


@lru_cache(maxsize=None)
def _ones(length):
    return (Fraction(1),) * length


def build_classical_system(q, n, d, indices=None):
    """Maximise sum B_i subject to the Delsarte inequalities (bound = 1 + optimum)."""
    _check(q, n, d)
    indices = list(range(d, n + 1)) if indices is None else list(indices)
    return _system(q, n, indices, lambda k, row: -row[0])


def build_improved_system(q, n, d, M):
    """Feasibility system for a code of size M under the improved inequalities."""
    _check(q, n, d)
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    indices = list(range(d, n + 1))
    sys = _system(q, n, indices, lambda k, row: delthm_rhs(q, n, M, k) - row[0], objective=False)
    sys.add(_ones(len(indices)), "=", M - 1, "size")
    return sys


def cw_indices(q, n, d, w, binary_parity=None):
    """Distances a weight-w code can realise: d <= i <= min(n, 2w), even when q = 2."""
    if binary_parity is None:
        binary_parity = q == 2
    idx = range(d, min(n, 2 * w) + 1)
    if binary_parity and q == 2:
        return [i for i in idx if i % 2 == 0]
    return list(idx)


def build_cw_system(q, n, d, w, M, binary_parity=None):
    """Feasibility system for a weight-w code of size M: all three row families plus the size row."""
    _check(q, n, d)
    if not 1 <= w <= n:
        raise ValueError(f"need 1 <= w <= n, got w={w}")
    if d > 2 * w:
        raise ValueError(f"d = {d} > 2w = {2 * w}: no two distinct weight-{w} words are that far apart")
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    indices = tuple(cw_indices(q, n, d, w, binary_parity))
    kraw, rows = _kraw(q, n), _rows(q, n, indices)
    sys = LinearSystem(tuple(f"B{i}" for i in indices))
    for k in range(1, n + 1):
        row = rows[k]
        p0 = kraw[k][0]
        sys.add(row, ">=", -p0, f"classical k={k}")
        sys.add(row, ">=", delthm_rhs(q, n, M, k) - p0, f"improved k={k}")
        sys.add(row, ">=", maintr_rhs(q, n, w, M, k), f"constant-weight k={k}")
    sys.add(_ones(len(indices)), "=", M - 1, "size")
    return sys


@dataclass
class BoundResult:
    q: int
    n: int
    d: int
    method: str
    bound: int
    w: int = None
    real_optimum: Fraction = None
    scan: list = field(default_factory=list)  # [(M, feasible)]
    certificate: dict = None
    warning: str = None

    def to_json(self):
        out = {"q": self.q, "n": self.n, "d": self.d}
        if self.w is not None:
            out["w"] = self.w
        out["method"] = self.method
        if self.real_optimum is not None:
            out["real_optimum"] = fmt_rational(self.real_optimum)
        out["bound"] = self.bound
        out["scan"] = [{"M": M, "feasible": f} for M, f in self.scan]
        if self.warning:
            out["warning"] = self.warning
        return out


def _warning(q):
    if is_prime_power(q):
        return None
    return f"q = {q} is not a prime power; the inequalities are only proved over F_q"


def _lp_optimum(sys, pivot_limit):
    res = simplex_solve(sys, pivot_limit)
    if res.status != "optimal":
        raise RuntimeError(f"classical LP unexpectedly {res.status}")
    return res


def classical_lp_bound(q, n, d, pivot_limit=DEFAULT_PIVOT_LIMIT):
    res = _lp_optimum(build_classical_system(q, n, d), pivot_limit)
    real = 1 + res.value
    return BoundResult(q, n, d, "classical", floor(real), real_optimum=real,
                       certificate=res.certificate(), warning=_warning(q))


def feasibility_scan(build, upper, pivot_limit=DEFAULT_PIVOT_LIMIT, max_warm=4):
    """Test build(M) for M = 2 .. upper + 1; stop at the first infeasible M.

    Returns (bound, trace, farkas result or None).  Bases from earlier solves
    are retried first; a retried basis only counts when its point passes the
    substitution audit, otherwise the full simplex runs.
    """
    warm = []
    trace = []
    for M in range(2, upper + 2):
        sys = build(M)
        key = sys.structure_key()
        x = None
        for ws in warm:
            if ws.key == key:
                x = ws.point(sys)
                if x is not None:
                    break
        if x is None:
            res = simplex_solve(sys, pivot_limit)
            if not res.feasible:
                trace.append((M, False))
                return M - 1, trace, res
            try:
                warm.insert(0, WarmStart(sys, res.basis))
                del warm[max_warm:]
            except ValueError:
                pass
        trace.append((M, True))
    return upper, trace, None


def improved_bound(q, n, d, pivot_limit=DEFAULT_PIVOT_LIMIT):
    upper = classical_lp_bound(q, n, d, pivot_limit).bound
    bound, trace, res = feasibility_scan(lambda M: build_improved_system(q, n, d, M),
                                         upper, pivot_limit)
    return BoundResult(q, n, d, "improved", bound, scan=trace,
                       certificate=res.certificate() if res else None, warning=_warning(q))


def cw_bound(q, n, d, w, binary_parity=None, pivot_limit=DEFAULT_PIVOT_LIMIT):
    _check(q, n, d)
    if not 1 <= w <= n:
        raise ValueError(f"need 1 <= w <= n, got w={w}")
    if d > 2 * w:
        return BoundResult(q, n, d, "constant-weight", 1, w=w, warning=_warning(q))
    indices = cw_indices(q, n, d, w, binary_parity)
    upper = floor(1 + _lp_optimum(build_classical_system(q, n, d, indices), pivot_limit).value)
    bound, trace, res = feasibility_scan(
        lambda M: build_cw_system(q, n, d, w, M, binary_parity), upper, pivot_limit)
    return BoundResult(q, n, d, "constant-weight", bound, w=w, scan=trace,
                       certificate=res.certificate() if res else None, warning=_warning(q))
