"""
Conjugation-closed families
===========================

A family is a list of distinct subgroups that conjugation by the ambient
group permutes. Closures are computed from seeds; Coxeter groups come with
the family of conjugates of their standard generators.
"""

from activesum import Subgroup, conjugation_closure, cyclic_family, is_generating
from activesum.catalog import named_group
from activesum.families import coxeter_matrix, coxeter_reflection_family

S4 = named_group("sym4")
seed = Subgroup(S4, [S4.generators[0]])
fam = conjugation_closure(S4, [seed])
print("closure of <(0 1)> in S_4:", len(fam), "members")
print("generating:", is_generating(fam))

# All cyclic subgroups of order 3 in SL(3,2): 56 elements of order 3, two per subgroup.
G = named_group("sl:3:2")
print("order-3 subgroups of SL(3,2):", len(cyclic_family(G, 3)))

# The Coxeter group B_3 by coset enumeration, with its 9 reflections.
W, refl = coxeter_reflection_family(coxeter_matrix("B3"))
print("|W(B_3)| =", W.order(), "with", len(refl), "reflection subgroups")
