"""
Derangement polynomials
=======================

Derangements counted by major index, desarrangements counted by inversions,
and the signed versions counted by flag-major index.
"""

from bperm.identities import d_closed_form, derangement_numbers, enum_polynomial
from bperm.identities.families import dnb_recurrence, dnb_two_term

print("d_n:", derangement_numbers(9))

# The maj polynomial over derangements and the inv polynomial over
# desarrangements coincide, and both match a sum with positive terms.
for n in range(7):
    D = enum_polynomial(n, "D")
    K = enum_polynomial(n, "K")
    print(f"n={n}  D == K: {D == K}  closed form: {D == d_closed_form(n)}  D(1) = {D.evaluate({'q': 1})}")

# Signed derangements by (fmaj, neg) satisfy two recurrences.
first, second = dnb_recurrence(5), dnb_two_term(5)
print()
for n in range(6):
    poly = enum_polynomial(n, "DnB")
    print(f"n={n}  {poly == first[n] == second[n]}  value at q=Z=1: {poly.evaluate({'q': 1, 'Z': 1})}")
