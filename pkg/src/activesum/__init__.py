"""Active sums of conjugation-closed subgroup families and C_n-cellularity certificates."""

from .active_sum import ActiveSumResult, active_sum_presentation, realize_active_sum
from .catalog import named_group
from .cellularity import (
    CellularityCertificate,
    SchurData,
    certify_theorem2,
    corollary1_check,
    corollary2_check,
    is_cn_equivalence,
    is_cn_generated,
    is_cn_injection,
    is_cn_trivial,
    lemma1_sweep,
    lemma1a_check,
    lemma1b_check,
    verify_certificate,
)
from .errors import *  # noqa: F401,F403
from .families import (
    CoxeterMatrix,
    SubgroupFamily,
    conjugation_closure,
    coxeter_matrix,
    coxeter_reflection_family,
    cyclic_family,
    exponent_divides,
    is_generating,
)
from .fp import Presentation, abelianization, todd_coxeter
from .groups import (
    Homomorphism,
    PermGroup,
    Subgroup,
    TorsionSet,
    alternating_group,
    conjugate_subgroup,
    cyclic_group,
    dihedral_group,
    element_order,
    enumerate_homs,
    exponent,
    hom_set_size,
    order,
    symmetric_group,
    torsion_set,
)
from .linear import sl_to_perm
from .perm import Perm, format_cycles, parse_cycles

__version__ = "0.1.0"
