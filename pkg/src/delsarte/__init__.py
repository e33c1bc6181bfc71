"""Exact Delsarte-type LP bounds for q-ary and q-ary constant-weight codes."""
from .code_oracle import Code, distance_distribution, verify_identities, verify_inequalities
from .inequality_constants import cw_constants, delthm_rhs, maintr_rhs, ostergard_rhs
from .lp_engine import classical_lp_bound, cw_bound, improved_bound
from .polynomials import PolyParams, krawtchouk, pk_minus, pk_plus

__all__ = [
    "Code", "PolyParams", "classical_lp_bound", "cw_bound", "cw_constants", "delthm_rhs",
    "distance_distribution", "improved_bound", "krawtchouk", "maintr_rhs", "ostergard_rhs",
    "pk_minus", "pk_plus", "verify_identities", "verify_inequalities",
]
