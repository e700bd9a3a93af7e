"""
Counting two-polyomino dissections of a 2n x 2n board
=====================================================

The count polynomial p(x) tracks white area with x.  Half its middle
coefficient is the number of dissections into two equal halves.
"""

import time

from gerrymander.engine import BoardSpec, count_polynomial, gerrymander_term, Strategy

p = count_polynomial(BoardSpec(4, 4))
print(p.coeffs)
print("middle coefficient", p[8], "->", p[8] // 2)

# the truncated strategy drops powers above the target area
for n in range(1, 5):
    t0 = time.perf_counter()
    a = gerrymander_term(n, Strategy("trunc"))
    print(n, a, f"{time.perf_counter() - t0:.2f}s")

# n = 5 builds a 7222-state system first; this takes about half a minute
# print(gerrymander_term(5, Strategy("trunc")))
