"""
Weighted signed permutations
============================

A weighted signed permutation stacks a nonincreasing word of weights on top
of a signed permutation.  This script takes one of order 13 apart, rebuilds
it one weight at a time, and then sends a smaller one through the two other
bijections used for the flag statistics.
"""

from bperm.perm import fmaj
from bperm.weighted import (
    WeightedSignedPermutation,
    enumerate_wsp,
    fdes_pairing,
    macmahon_from_word,
    macmahon_to_word,
    wsp_decompose,
    wsp_insertion_steps,
)

p = WeightedSignedPermutation.parse(
    "c=10,10,9,7,7,7,4,4,4,3,2,2,1;w=1,2,-7,-6,-5,-4,3,8,9,-10,12,13,-11"
)
d = wsp_decompose(p)
print("pair         ", p)
print("decomposed   ", d)

# Rebuild: the weights sitting over fixed points go back in, largest first.
for weight, times, partial in wsp_insertion_steps(d):
    print(f"insert {weight:>2} x{times}  {partial}")

# Reading the weights in the order of |letter| gives an arbitrary word d.
q = WeightedSignedPermutation.parse("c=10,9,7,4,4,2,2,1,1;w=1,-4,-3,2,5,6,8,-9,-7")
word = macmahon_to_word(q)
print()
print("weights by letter  ", word, " tot =", word.tot, " odd =", word.odd)
print("and back           ", macmahon_from_word(word))

# The pairing strips the flag descents out of the weights.
r = WeightedSignedPermutation.parse("c=9,7,7,4,4,4,2,2,1,1;w=-4,-3,-2,1,5,6,8,9,-10,-7")
b, w = fdes_pairing(r)
print()
print("b =", b, "   2 tot b + fmaj w =", 2 * b.tot + fmaj(w), "= tot c =", r.c.tot)

# Every word in {0..s}^n is hit exactly once.
for n, s in [(2, 2), (3, 2), (3, 3)]:
    print(f"|WSP_{n}({s})| = {sum(1 for _ in enumerate_wsp(n, s))} = {(s + 1) ** n}")
