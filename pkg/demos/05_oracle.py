"""
Brute force for small boards
============================

Every coloring of a small board, flood filled with bit masks.  The histogram
by white area should reproduce p(x) apart from the two monochrome ends.
"""

from gerrymander.engine import BoardSpec, count_polynomial
from gerrymander.oracle import oracle_histogram

res = oracle_histogram(4, 4)
print(res.by_white_area())
p = count_polynomial(BoardSpec(4, 4))
print(p.coeffs[1:-1])

# three colors, one connected region each
print(oracle_histogram(2, 3, 3).to_json())
