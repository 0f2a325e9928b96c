"""
The imaginary fields that pass
==============================

For m < 0 the check is mostly a Kronecker symbol computation: if every prime
below sqrt(|Delta|/3) is inert, nothing needs a witness. Scanning
-170 <= m <= -1 turns up exactly the nine Heegner fields.
"""

from quadpid import certify_range

certs = certify_range(-170, -1)
passed = [c for c in certs if c.certified]

for c in passed:
    print(f"{c.field.m:5d}  {c.summary()}")

###############################################################################
# m = -7 is the one field here whose certificate is not empty: 2 splits
# because -7 = 1 (mod 8), and (1 + sqrt -7)/2 has norm 2.

print(len(certs), "fields checked,", len(passed), "certified")
print([c.field.m for c in passed])

# every failure names the smallest prime with no element of that norm
fails = [c for c in certs if not c.certified]
print(sorted({c.failing_prime for c in fails}))
