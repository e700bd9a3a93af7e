"""
Evaluation, interpolation and the Chinese remainder theorem
===========================================================

Instead of carrying big integers we evaluate p(x) at small points modulo
31-bit primes, interpolate using the palindromic symmetry, then glue
residues together.
"""

from gerrymander.engine import BoardSpec, RunInfo, Strategy, count_polynomial, transfer_system
from gerrymander.polyring import binomial_bound, height_bound, primes_for_bound
from gerrymander.transfer import max_row_nnz

spec = BoardSpec(6, 6)
info = RunInfo()
p = count_polynomial(spec, Strategy("crt"), info)
print(p[18] // 2, "using primes", info.primes)

# the default prime count comes from C(36, 18); the certified one from the
# transfer system itself
ts = transfer_system(6)
print(binomial_bound(36), height_bound(ts.size, max_row_nnz(ts), 4))

info = RunInfo()
count_polynomial(spec, Strategy("crt", certified=True), info)
print(len(info.primes), "primes when certified")

# the fourteen-row system has 393878 states and 16384 targets per row at most
b = height_bound(393878, 16384, 12)
print(f"{b:.4g}", len(primes_for_bound(b)), "primes")
