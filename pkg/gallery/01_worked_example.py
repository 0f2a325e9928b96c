"""
One reduction step in Z[sqrt 14]
================================

137 splits in Z[sqrt 14] because 39^2 = 14 (mod 137). One step of the
Dedekind-Hasse reduction on (137, 39 - sqrt 14) already lands on a generator
of the prime ideal above 137.
"""

from quadpid import QuadInt, build_prime_table, dh_gcd, dh_step, field_params, parse
from quadpid.quadcore import xi_reduce

f = field_params(14)
table = build_prime_table(f)
print(table.entries)  # the only witness needed: an element of norm 2

alpha = QuadInt.from_int(137, f)
beta = parse("39-1*sqrt(14)", f)

# alpha/beta written as (a + b sqrt m)/c
print(xi_reduce(alpha, beta))

###############################################################################
# The step picks gamma, delta so that alpha*gamma - beta*delta has norm
# strictly below N(beta) = 1507.

step = dh_step(alpha, beta, table)
print("gamma =", step.gamma)
print("delta =", step.delta)
print("rho   =", step.rho, " N =", step.rho.norm())
print("trace =", step.trace)

###############################################################################
# rho divides beta, so the loop stops after one step. The Bezout
# coefficients come along for free.

g = dh_gcd(alpha, beta, table)
print(g.gcd, g.lam, g.mu, g.chain_length)
assert alpha * g.lam + beta * g.mu == g.gcd
