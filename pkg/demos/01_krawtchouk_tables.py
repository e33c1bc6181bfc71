# coding: utf-8

# # Krawtchouk polynomials and their split
#
# P_k(n; x) is the eigenvalue table of the Hamming scheme.  Every value splits
# into two nonnegative pieces, P_k = P_k^+ - P_k^-, whose sum is the number of
# words at distance k from a fixed word.

from delsarte.polynomials import PolyParams, kraw_table, krawtchouk_row, scaled_pk_minus

# Binary length 4 first.  Row k is the familiar alternating pattern.

for k in range(1, 5):
    print(k, krawtchouk_row(2, 4, k))


# The split table for q = 3, n = 4.  P_minus carries halves when q is odd.

print(f"{'k':>2} {'x':>2} {'P':>5} {'P-':>6} {'P+':>6}")
for k, x, p, pm, pp in kraw_table(3, 4):
    print(f"{k:>2} {x:>2} {p:>5} {str(pm):>6} {str(pp):>6}")


# Scaling P^- by 2(q-1)/q always lands on an integer.

for x in range(5):
    print(x, scaled_pk_minus(PolyParams(5, 4, 2, x)))
