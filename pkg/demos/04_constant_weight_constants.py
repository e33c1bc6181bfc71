# coding: utf-8

# # The constant-weight constants
#
# T(k) bounds S(k) for a weight-w code.  It is assembled from a quotient and
# remainder of the total nonzero mass spread over the combined columns.

from fractions import Fraction

from delsarte.inequality_constants import (cw_constants, matrix_balancing_max,
                                           max_pairwise_products, ostergard_rhs)

c = cw_constants(3, 4, 2, 3, 1)
for key, value in c.to_json().items():
    print(f"{key:>9} {value}")


# At k = 1 the general construction reproduces the closed form known for
# single columns.

q = 5
for M in range(2, 8):
    T = cw_constants(q, 5, 2, M, 1).T
    print(M, Fraction(2 * T, q - 1), ostergard_rhs(q, 5, 2, M))


# The pieces: splitting M into h balanced parts maximises the pairwise
# products, and balancing a matrix column by column does the same with a
# fixed number of nonzeros.

print([max_pairwise_products(10, h) for h in range(1, 6)])
print(matrix_balancing_max(3, c.dividend, 3, c.divisor), c.T)
