# coding: utf-8

# # LP bounds side by side
#
# The classical bound is an LP optimum.  The improved and constant-weight
# versions tighten the right-hand sides once the code size M is fixed, so they
# are evaluated by testing M = 2, 3, ... for feasibility.

import numpy as np

from delsarte.code_oracle import max_code_size
from delsarte.finite_field import EnumerationLimitError
from delsarte.lp_engine import classical_lp_bound, cw_bound, improved_bound

rows = []
for q, n in [(2, 5), (2, 7), (3, 4), (3, 6)]:
    for d in range(2, n + 1):
        cls = classical_lp_bound(q, n, d)
        imp = improved_bound(q, n, d)
        try:
            true = max_code_size(q, n, d)
        except EnumerationLimitError:
            true = -1
        rows.append((q, n, d, cls.bound, imp.bound, true))

# -1 marks searches that ran past the node budget.

table = np.array(rows)
print("  q  n  d  classical  improved  exact")
for r in table:
    print("{:3d}{:3d}{:3d}{:11d}{:10d}{:7d}".format(*r))


# Where the improved scan beats the plain LP.

gain = table[:, 3] - table[:, 4]
print(table[gain > 0])


# The real optimum behind a classical bound is exact.

print(classical_lp_bound(2, 4, 3).real_optimum)


# Constant weight: ternary length 5, distance 3, each weight.

for w in range(1, 6):
    b = cw_bound(3, 5, 3, w)
    print(w, b.bound, [M for M, ok in b.scan if not ok])
