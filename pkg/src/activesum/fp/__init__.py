from .coset_enum import DEFAULT_BUDGET, CosetTable, todd_coxeter
from .presentation import (
    Presentation,
    canonical_relator,
    cyclic_reduce,
    free_reduce,
    inverse_word,
    parse_word,
    power_word,
)
from .smith import AbelianInvariants, abelianization, smith_diagonal

__all__ = [
    "DEFAULT_BUDGET",
    "AbelianInvariants",
    "CosetTable",
    "Presentation",
    "abelianization",
    "canonical_relator",
    "cyclic_reduce",
    "free_reduce",
    "inverse_word",
    "parse_word",
    "power_word",
    "smith_diagonal",
    "todd_coxeter",
]
