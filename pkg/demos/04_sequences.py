"""
Fixed-height sequences
======================

Fix the board height m and grow the width.  For m = 3 the numbers also come
out of a closed-form generating function, which makes a handy cross-check.
"""

from gerrymander.analytic import knuth_series, sqrt_series
from gerrymander.engine import fixed_m_sequence

print(fixed_m_sequence(2, 10))
print(fixed_m_sequence(1, 5))  # a strip splits in two ways only

engine = fixed_m_sequence(3, 15)
series = knuth_series(15)
print(engine)
print(series[1:] == engine)

s = sqrt_series(6)
print([str(s[k]) for k in range(7)])
