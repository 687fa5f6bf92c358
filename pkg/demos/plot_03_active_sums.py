"""
Active sums by coset enumeration
================================

The active sum S of a family is the free product of its members with the
conjugation action of the ambient group imposed. Coset enumeration over the
trivial subgroup gives S as a permutation group together with the canonical
map phi: S -> G.
"""

from activesum import active_sum_presentation, cyclic_family, realize_active_sum
from activesum.catalog import named_group
from activesum.fp import abelianization

S3 = named_group("sym3")
fam = cyclic_family(S3, 2)
P = active_sum_presentation(fam, "cyclic")
print(P.format())

r = realize_active_sum(S3, fam)
print("\n".join(r.report_lines()))

# For A_4 and its four subgroups of order 3 the map is onto but not injective:
# S is a double cover of order 24.
A4 = named_group("alt4")
r = realize_active_sum(A4, cyclic_family(A4, 3))
print("A_4: order_S =", r.order_S, "kernel =", r.kernel_order, "iso =", r.is_iso)
print("abelianization of S:", abelianization(r.presentation))

# SL(3,2) with its 28 subgroups of order 3.
G = named_group("sl:3:2")
r = realize_active_sum(G, cyclic_family(G, 3))
print("SL(3,2): order_S =", r.order_S, "|ker phi| =", r.kernel_order)
