"""
Real quadratic fields up to 100
===============================

Real fields need actual witnesses: for each prime p below sqrt(Delta/5)
that is not inert, an element of norm +-p. The search is bounded by the
fundamental unit, so a miss is a proof of absence.
"""

from quadpid import certify_range, fundamental_unit

for c in certify_range(2, 100):
    eps = fundamental_unit(c.field.m)
    tag = "PID " if c.certified else "  ? "
    print(f"{tag} m={c.field.m:3d}  eps={str(eps.unit):>26s}  {c.summary()}")

###############################################################################
# m = 94 is a good stress case: the fundamental unit is 2143295 + 221064
# sqrt 94, and the witness for p = 2 sits far out.

c = certify_range(94, 94)[0]
print(c.witness_table.entries)
