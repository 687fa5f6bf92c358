"""
Cellularity certificates
========================

A certificate records why the active sum S of a family is C_n-cellular:
every member is cyclic of order dividing n (or carries its own certificate),
the family is closed and distinct, and S was realized. The verifier
recomputes everything from the raw inputs.
"""

from activesum import certify_theorem2, verify_certificate
from activesum.catalog import named_group
from activesum.cellularity import SchurData, corollary1_check, corollary2_check
from activesum.families import coxeter_matrix, coxeter_reflection_family, cyclic_family

W, fam = coxeter_reflection_family(coxeter_matrix("A3"))
cert = certify_theorem2(W, fam, 2)
print(cert.serialize())
print("verified:", verify_certificate(cert).accepted)

# Schur multipliers are literature data; the group is identified by signature.
schur = SchurData.bundled()
print("\n".join(corollary1_check(cert, schur).lines()))
print("\n".join(corollary2_check(W, fam, 2, schur, cert=cert).lines()))

# A_4 at n = 3: the certificate is about S, which is not A_4.
A4 = named_group("alt4")
cert = certify_theorem2(A4, cyclic_family(A4, 3), 3)
print("A_4 family: subject", cert.subject, "iso", cert.facts["iso"])
print("\n".join(corollary1_check(cert, schur).lines()))
