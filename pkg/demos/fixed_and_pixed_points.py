"""
Fixed points versus pixed points
================================

Two statistics on signed permutations that look unrelated but have the
same joint distribution.  We look at one word closely, push it through the
bijection ``phi`` and then compare the two generating polynomials.
"""

from bperm.identities import enum_polynomial, phi, phi_inverse
from bperm.perm import SignedPermutation, pixed_factorization, stat_profile

w = SignedPermutation.parse("3,-2,8,4,5,-1,9,-6,7")
profile = stat_profile(w)
print("w                 =", w)
print("positive fixed    =", sorted(profile.fix_plus_set))
print("negative fixed    =", sorted(profile.fix_minus_set))
print("negative letters  =", sorted(profile.neg_set))

# Pixed points come from splitting the word into an increasing negative
# block, an increasing positive block, and the longest desarrangement tail.
for word in ["-5,-2,-3,-4,1", "-5,-3,-2,1,4", "-5,-3,1,4,2"]:
    print(f"{word:>16}  ->  {pixed_factorization(SignedPermutation.parse(word))}")

# phi moves fixed points to the front and rearranges the rest into a
# desarrangement, so the fixed points of w become the pixed points of phi(w).
image = phi(w)
print()
print("phi(w)            =", image)
print("factorization     =", pixed_factorization(image))
print("back again        =", phi_inverse(image))

# Summed over the whole group the two polynomials agree term by term.
print()
for n in range(4):
    fix = enum_polynomial(n, "FIX")
    pix = enum_polynomial(n, "PIX")
    print(f"n={n}  equal={fix == pix}  {fix}")
