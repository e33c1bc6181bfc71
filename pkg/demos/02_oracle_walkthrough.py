# coding: utf-8

# # Checking the counting identities on explicit codes
#
# The quantity S(k) adds up, over every way of combining k columns with
# nonzero coefficients, the number of unequal symbol pairs in the combined
# column.  It can be computed column-wise or pair-wise; both must agree, and
# both are tied to the distance distribution.

from delsarte.code_oracle import (Code, distance_distribution, random_code, s1_of_k_paircount,
                                  s_of_k_direct, verify_identities, verify_inequalities)
from delsarte.suites import cw_suite

C = random_code(3, 4, 6, seed=1)
for row in C.rows:
    print(row)

dd = distance_distribution(C)
print("distance distribution:", [str(b) for b in dd.B])


# The column walk and the pair walk.

for k in range(1, 5):
    print(k, s_of_k_direct(C, k), s1_of_k_paircount(C, k))


# verify_* bundles every identity and inequality into one report.

rep = verify_identities(C)
rep.extend(verify_inequalities(C))
for name, (ok, total) in rep.counts().items():
    print(f"{name}: {ok}/{total}")


# Codes that meet the bounds exactly.  The whole of F_3^2 has no slack in the
# improved inequality, and {1100, 0011} sits on the constant-weight bound.

full = Code(3, 2, tuple((a, b) for a in range(3) for b in range(3)))
for r in verify_inequalities(full).results:
    if r.check == "improved_delsarte":
        print(r.params["k"], r.actual, r.expected)

pair = Code.from_strings(["1100", "0011"])
for r in verify_inequalities(pair, 2).results:
    if r.check == "cw_inequality":
        print(r.params["k"], r.actual, r.expected)


# A seeded batch of constant-weight codes.

report = cw_suite(samples=100, seed=5)
print(report.passed, len(report.results))
