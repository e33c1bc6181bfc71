"""Exact two-phase simplex over the rationals.

Bland's least-index rule is used for both the entering and the leaving
variable, so the method terminates and is reproducible.  Every answer is
audited by substitution before it is returned:

* optimal   -- the primal point satisfies every row, and a dual vector ``y``
               proves no feasible point does better;
* infeasible -- a Farkas vector ``y`` is returned and checked.

Certificate convention, for rows ``a_i . x (rel) b_i`` with ``x >= 0``:
``y_i >= 0`` on ``>=`` rows, ``y_i <= 0`` on ``<=`` rows, free on ``=``
rows.  Then ``y^T A x >= y^T b`` for every feasible ``x``.

* Farkas: ``y^T A <= 0`` (``= 0`` on free variables) and ``y^T b > 0``.
* Optimality for ``max c.x``: ``y^T A + c <= 0`` and ``c.x* == -y^T b``.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .rational import fast_rational as Q, to_fraction

RELATIONS = (">=", "<=", "=")
DEFAULT_PIVOT_LIMIT = 10**6


def _frac(v):
    return v if type(v) is Fraction else Fraction(v)


class PivotLimitError(RuntimeError):
    pass


class CertificateError(AssertionError):
    """An internally produced certificate failed its own audit."""


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: Fraction
    name: str = ""

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        coeffs = self.coeffs
        if type(coeffs) is not tuple or any(type(c) is not Fraction for c in coeffs):
            object.__setattr__(self, "coeffs", tuple(_frac(c) for c in coeffs))
        object.__setattr__(self, "rhs", _frac(self.rhs))


@dataclass
class LinearSystem:
    """Rows over named variables; ``objective`` (if any) is maximised."""

    names: tuple
    constraints: list = field(default_factory=list)
    objective: tuple = None
    nonneg: bool = True

    def __post_init__(self):
        self.names = tuple(self.names)
        for c in self.constraints:
            if len(c.coeffs) != len(self.names):
                raise ValueError(f"constraint {c.name!r} has {len(c.coeffs)} coefficients, "
                                 f"expected {len(self.names)}")
        if self.objective is not None:
            if len(self.objective) != len(self.names):
                raise ValueError("objective length does not match variable count")
            self.objective = tuple(Fraction(c) for c in self.objective)

    def add(self, coeffs, relation, rhs, name=""):
        c = Constraint(coeffs if type(coeffs) is tuple else tuple(coeffs), relation, rhs, name)
        if len(c.coeffs) != len(self.names):
            raise ValueError(f"expected {len(self.names)} coefficients, got {len(c.coeffs)}")
        self.constraints.append(c)

    def structure_key(self):
        """Hashable left-hand side; systems sharing it differ only in right-hand sides."""
        return (self.names, self.nonneg,
                tuple((c.coeffs, c.relation) for c in self.constraints))

    def violations(self, x):
        x = [Q(v) for v in x]
        bad = []
        if self.nonneg:
            bad += [f"{self.names[j]} < 0" for j, v in enumerate(x) if v < 0]
        for c in self.constraints:
            lhs = sum((Q(a) * v for a, v in zip(c.coeffs, x) if a), Q(0))
            rhs = Q(c.rhs)
            ok = (lhs >= rhs if c.relation == ">=" else
                  lhs <= rhs if c.relation == "<=" else lhs == rhs)
            if not ok:
                bad.append(c.name or repr(c))
        return bad

    def satisfied_by(self, x):
        return not self.violations(x)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction = None
    x: tuple = None
    y: tuple = None  # dual multipliers (optimal) or Farkas vector (infeasible)
    basis: tuple = None
    pivots: int = 0

    @property
    def feasible(self):
        return self.status != "infeasible"

    def certificate(self):
        if self.status == "optimal":
            return {"kind": "optimal", "x": self.x, "y": self.y}
        if self.status == "infeasible":
            return {"kind": "farkas", "y": self.y}
        return {"kind": "unbounded"}


class _StandardForm:
    """Columns: structural (split if free), one slack per inequality, one artificial per row."""

    def __init__(self, sys):
        self.sys = sys
        self.m = m = len(sys.constraints)
        self.var_cols = []  # per variable: list of (std column, sign)
        col = 0
        for _ in sys.names:
            if sys.nonneg:
                self.var_cols.append([(col, 1)])
                col += 1
            else:
                self.var_cols.append([(col, 1), (col + 1, -1)])
                col += 2
        self.n_struct = col
        self.slack_of = {}
        for i, c in enumerate(sys.constraints):
            if c.relation != "=":
                self.slack_of[i] = col
                col += 1
        self.n_real = col
        self.art0 = col
        self.ncols = col + m

    def dense(self):
        """Unflipped rows [A | slacks] and b, as fast rationals."""
        rows, b = [], []
        zero = Q(0)
        for i, c in enumerate(self.sys.constraints):
            row = [zero] * self.n_real
            for j, a in enumerate(c.coeffs):
                if a:
                    for col, sgn in self.var_cols[j]:
                        row[col] = Q(a) * sgn
            if i in self.slack_of:
                row[self.slack_of[i]] = Q(-1 if c.relation == ">=" else 1)
            rows.append(row)
            b.append(Q(c.rhs))
        return rows, b

    def x_from(self, z):
        return tuple(to_fraction(sum((z.get(col, 0) * sgn for col, sgn in cols), Q(0)))
                     for cols in self.var_cols)


def _pivot(T, z, r, c):
    row = T[r]
    piv = row[c]
    if piv != 1:
        inv = 1 / piv
        T[r] = row = [v * inv for v in row]
    nz = [j for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
    f = z[c]
    if f:
        for j in nz:
            z[j] -= f * row[j]


def _reduced_costs(T, basis, d, ncols):
    z = list(d) + [Q(0)]
    for i, bi in enumerate(basis):
        db = d[bi]
        if db:
            row = T[i]
            for j in range(ncols + 1):
                if row[j]:
                    z[j] -= db * row[j]
    return z


def _bland(T, z, basis, eligible, limit, pivots):
    """Run Bland's rule to optimality; return ("optimal"|"unbounded", entering col, pivots)."""
    while True:
        enter = next((j for j in eligible if z[j] < 0), None)
        if enter is None:
            return "optimal", None, pivots
        leave, best = None, None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            return "unbounded", enter, pivots
        if pivots >= limit:
            raise PivotLimitError(f"pivot limit {limit} exceeded")
        _pivot(T, z, leave, enter)
        basis[leave] = enter
        pivots += 1


def _row_multipliers(sf, T, z, basis, d_art):
    """Dual values pi_i = d_art - reduced cost of artificial i, mapped back through row flips."""
    return [d_art - z[sf.art0 + i] for i in range(sf.m)]


def simplex_solve(sys, pivot_limit=DEFAULT_PIVOT_LIMIT):
    """Solve ``sys`` exactly; without an objective, only feasibility is decided."""
    sf = _StandardForm(sys)
    m, ncols = sf.m, sf.ncols
    rows, b = sf.dense()
    zero, one = Q(0), Q(1)
    sigma = []
    T = []
    for i in range(m):
        s = -1 if b[i] < 0 else 1
        sigma.append(s)
        art = [zero] * m
        art[i] = one
        T.append([v * s for v in rows[i]] + art + [b[i] * s])
    basis = [sf.art0 + i for i in range(m)]
    eligible = range(sf.n_real)

    d1 = [zero] * sf.n_real + [one] * m
    z = _reduced_costs(T, basis, d1, ncols)
    _, _, pivots = _bland(T, z, basis, eligible, pivot_limit, 0)
    if -z[-1] > 0:
        pi = _row_multipliers(sf, T, z, basis, one)
        y = tuple(to_fraction(p * s) for p, s in zip(pi, sigma))
        _audit_farkas(sys, y)
        return LPResult("infeasible", y=y, pivots=pivots)

    # drive zero-level artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= sf.art0:
            j = next((j for j in eligible if T[i][j]), None)
            if j is not None:
                _pivot(T, z, i, j)
                basis[i] = j
                pivots += 1

    d2 = [zero] * ncols
    if sys.objective is not None:
        for j, c in enumerate(sys.objective):
            for col, sgn in sf.var_cols[j]:
                d2[col] = -Q(c) * sgn
    z = _reduced_costs(T, basis, d2, ncols)
    status, _, pivots = _bland(T, z, basis, eligible, pivot_limit, pivots)

    values = {bi: T[i][-1] for i, bi in enumerate(basis)}
    x = sf.x_from(values)
    bad = sys.violations(x)
    if bad:
        raise CertificateError(f"simplex produced an infeasible point: {bad[:3]}")
    real_basis = tuple(bi for bi in basis)
    if status == "unbounded":
        return LPResult("unbounded", x=x, basis=real_basis, pivots=pivots)
    if sys.objective is None:
        return LPResult("optimal", x=x, basis=real_basis, pivots=pivots)
    pi = _row_multipliers(sf, T, z, basis, zero)
    y = tuple(to_fraction(p * s) for p, s in zip(pi, sigma))
    value = sum((c * v for c, v in zip(sys.objective, x)), Fraction(0))
    _audit_optimal(sys, y, value)
    return LPResult("optimal", value=value, x=x, y=y, basis=real_basis, pivots=pivots)


def _sign_ok(sys, y):
    for c, yi in zip(sys.constraints, y):
        if c.relation == ">=" and yi < 0 or c.relation == "<=" and yi > 0:
            return False
    return True


def _combined(sys, y):
    return [sum((yi * c.coeffs[j] for yi, c in zip(y, sys.constraints)), Fraction(0))
            for j in range(len(sys.names))]


def check_farkas(sys, y):
    """True iff ``y`` proves that ``sys`` has no feasible point."""
    if len(y) != len(sys.constraints) or not _sign_ok(sys, y):
        return False
    yA = _combined(sys, y)
    if sys.nonneg:
        if any(v > 0 for v in yA):
            return False
    elif any(yA):
        return False
    return sum((yi * c.rhs for yi, c in zip(y, sys.constraints)), Fraction(0)) > 0


def check_optimal(sys, y, value):
    """True iff ``y`` proves that no feasible point has objective above ``value``."""
    if len(y) != len(sys.constraints) or not _sign_ok(sys, y):
        return False
    reduced = [a + c for a, c in zip(_combined(sys, y), sys.objective)]
    if sys.nonneg:
        if any(v > 0 for v in reduced):
            return False
    elif any(reduced):
        return False
    return -sum((yi * c.rhs for yi, c in zip(y, sys.constraints)), Fraction(0)) == value


def _audit_farkas(sys, y):
    if not check_farkas(sys, y):
        raise CertificateError("Farkas certificate failed verification")


def _audit_optimal(sys, y, value):
    if not check_optimal(sys, y, value):
        raise CertificateError("dual certificate failed verification")


class WarmStart:
    """Re-use a basis of one system for others with the same left-hand side.

    The basis matrix is inverted once; each :meth:`point` call is a
    matrix-vector product followed by a sign check and a full substitution
    audit.  Returns None when the basis is not primal feasible for the new
    right-hand side.
    """

    def __init__(self, sys, basis):
        self.key = sys.structure_key()
        sf = _StandardForm(sys)
        if len(basis) != sf.m or any(bi >= sf.n_real for bi in basis):
            raise ValueError("basis must consist of m structural or slack columns")
        self.sf = sf
        self.basis = tuple(basis)
        rows, _ = sf.dense()
        self.lhs = [[Q(a) for a in c.coeffs] for c in sys.constraints]
        self.relations = [c.relation for c in sys.constraints]
        self.inverse = _invert([[row[bi] for bi in basis] for row in rows])
        if self.inverse is None:
            raise ValueError("singular basis")

    def point(self, sys):
        if sys.structure_key() != self.key:
            raise ValueError("system left-hand side differs from the warm-start basis")
        b = [Q(c.rhs) for c in sys.constraints]
        values = {}
        for bi, inv_row in zip(self.basis, self.inverse):
            v = sum((a * bb for a, bb in zip(inv_row, b) if a), Q(0))
            if v < 0:
                return None
            values[bi] = v
        x = self.sf.x_from(values)
        xq = [Q(v) for v in x]
        if sys.nonneg and any(v < 0 for v in xq):
            return None
        for row, rel, rhs in zip(self.lhs, self.relations, b):
            lhs = sum((a * v for a, v in zip(row, xq) if a), Q(0))
            if not (lhs >= rhs if rel == ">=" else lhs <= rhs if rel == "<=" else lhs == rhs):
                return None
        return x


def _invert(A):
    n = len(A)
    M = [list(row) + [Q(1) if i == j else Q(0) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        r = next((r for r in range(c, n) if M[r][c]), None)
        if r is None:
            return None
        M[c], M[r] = M[r], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bv for a, bv in zip(M[i], M[c])]
    return [row[n:] for row in M]
