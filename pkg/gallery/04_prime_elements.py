"""
Prime elements above the bound
==============================

Once a field is certified, the gcd loop finds a generator of any prime ideal:
for split p with x^2 = m (mod p), gcd(p, x - sqrt m) has norm +-p.
"""

from quadpid import build_prime_table, field_params, prime_element, reduce_unit
from quadpid.zarith import fundamental_unit, kronecker, sieve

f = field_params(14)
table = build_prime_table(f)
eps = fundamental_unit(14).unit

for p in sieve(120)[1:]:
    if kronecker(f.delta, p) != 1:
        continue
    pi = prime_element(f, p, table)
    # tidy up the associate by stripping powers of the unit
    print(f"{p:4d}  {str(reduce_unit(pi, eps)):>20s}  N = {pi.norm()}")

###############################################################################
# The same thing in the Gaussian integers, where it recovers the
# two-squares decomposition of p = 1 (mod 4).

g = field_params(-1)
tg = build_prime_table(g)
for p in (5, 13, 17, 29, 37, 41):
    pi = prime_element(g, p, tg)
    a, b = pi.coords()
    print(p, "=", f"{abs(a)}^2 + {abs(b)}^2")
