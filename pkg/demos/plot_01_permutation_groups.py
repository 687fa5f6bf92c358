"""
Permutation groups, torsion sets and homomorphisms
==================================================

Groups are generated by permutations of 0..d-1. Orders and membership go
through a base and strong generating set; small groups can also be listed.
"""

from activesum import PermGroup, parse_cycles, format_cycles
from activesum.groups import cyclic_group, enumerate_homs, torsion_set
from activesum.linear import sl_to_perm

# S_3 from a transposition and a 3-cycle. Products compose left to right.
S3 = PermGroup([parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)])
print("order of S_3:", S3.order())
print("exponent:", S3.exponent())

# The 2-torsion set {x : x^2 = 1}: the identity and the three transpositions.
T = torsion_set(S3, 2)
print("S_3 elements with x^2 = 1:", [format_cycles(x) for x in T])

# Homomorphisms C_2 -> S_3 correspond one-to-one with that set.
homs = enumerate_homs(cyclic_group(2), S3)
print("|Hom(C_2, S_3)| =", len(homs))

# SL(3,2) acting on the seven nonzero vectors of F_2^3.
G = sl_to_perm(3, 2)
print("SL(3,2): degree", G.degree, "order", G.order())
print("generators:", G.metadata["generators"])
