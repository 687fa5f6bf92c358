"""
Exhaustive divisor-lemma sweep
==============================

A homomorphism f: X -> Y is a C_n-equivalence when it maps the n-torsion of
X bijectively onto that of Y. If so, it does the same for every divisor m of
n. Here every homomorphism between small catalog groups is checked.
"""

import time

from activesum.catalog import named_group, sweep_catalog
from activesum.cellularity import lemma1_sweep

names = sweep_catalog(16)
print(len(names), "groups:", ", ".join(names))
start = time.perf_counter()
report = lemma1_sweep({name: named_group(name) for name in names})
print("\n".join(report.lines()))
print(f"{time.perf_counter() - start:.1f}s")
