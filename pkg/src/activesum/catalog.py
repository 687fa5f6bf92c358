"""Named groups, the bundled fixture corpus and the small-group sweep catalog."""

from functools import lru_cache
from importlib import resources
import re

from .families import coxeter_matrix, coxeter_reflection_family
from .groups import (
    PermGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from .linear import sl_to_perm
from .perm import Perm

# named fixture corpus shipped with the package
FIXTURE_GROUPS = (
    [f"sym{k}" for k in range(2, 6)]
    + [f"alt{k}" for k in range(3, 6)]
    + [f"dihedral{k}" for k in range(3, 9)]
    + ["sl:2:2", "sl:2:3", "sl:3:2"]
)
FIXTURE_COXETER = ["A1", "A2", "A3", "B2", "B3", "I2(4)", "I2(5)", "I2(6)", "H3"]


def fixture_text(name):
    return resources.files("activesum").joinpath("fixtures", name).read_text()


def fixture_path(name):
    return resources.files("activesum").joinpath("fixtures", name)


def quaternion_group():
    i = Perm.from_cycles([(0, 1, 3, 6), (2, 5, 7, 4)], 8)
    j = Perm.from_cycles([(0, 2, 3, 7), (1, 4, 6, 5)], 8)
    return PermGroup([i, j], degree=8, name="quaternion8")


def abelian_group(orders):
    """Direct product of cyclic groups of the given orders on disjoint points."""
    orders = [int(m) for m in orders]
    degree = sum(orders)
    gens = []
    start = 0
    for m in orders:
        if m > 1:
            gens.append(Perm.from_cycles([tuple(range(start, start + m))], degree))
        start += m
    return PermGroup(gens, degree=max(degree, 1), name="abelian:" + ",".join(map(str, orders)))


_NAMED = re.compile(r"(sym|alt|cyclic|dihedral)\s*(\d+)")
_SL = re.compile(r"sl[:\s]\s*(\d+)[:\s]\s*(\d+)")
_ABELIAN = re.compile(r"abelian:\s*(\d+(?:\s*,\s*\d+)*)")
_SHORT = re.compile(r"([SACD])(\d+)")


@lru_cache(maxsize=None)
def named_group(spec):
    """Build a group from a name.

    Accepted: ``sym k``/``symk``, ``alt k``, ``cyclic k``, ``dihedral k``
    (order 2k), ``sl n q``/``sl:n:q``, ``abelian:m1,m2,...``, ``quaternion8``,
    ``klein4``, ``coxeter:TYPE`` (e.g. ``coxeter:B3``) and the short forms
    S3, A4, C6, D4.
    """
    s = spec.strip()
    low = s.lower()
    m = _NAMED.fullmatch(low)
    if m:
        kind, k = m.group(1), int(m.group(2))
        ctor = {"sym": symmetric_group, "alt": alternating_group, "cyclic": cyclic_group, "dihedral": dihedral_group}[kind]
        G = ctor(k)
        G.name = f"{kind}{k}"
        return G
    m = _SL.fullmatch(low)
    if m:
        return sl_to_perm(int(m.group(1)), int(m.group(2)))
    m = _ABELIAN.fullmatch(low)
    if m:
        return abelian_group(m.group(1).split(","))
    if low == "quaternion8":
        return quaternion_group()
    if low == "klein4":
        G = dihedral_group(2)
        G.name = "klein4"
        return G
    if low.startswith("coxeter:"):
        W, _ = coxeter_reflection_family(coxeter_matrix(s.split(":", 1)[1]))
        W.name = low
        return W
    m = _SHORT.fullmatch(s)
    if m:
        kind = {"S": "sym", "A": "alt", "C": "cyclic", "D": "dihedral"}[m.group(1)]
        return named_group(f"{kind}{m.group(2)}")
    raise KeyError(f"unknown group name {spec!r}")


def sweep_catalog(max_order=16):
    """Small groups used for exhaustive homomorphism sweeps, by name."""
    names = [f"cyclic{k}" for k in range(1, 17)]
    names += ["klein4", "sym3", "quaternion8", "alt4"]
    names += [f"dihedral{k}" for k in range(4, 9)]
    names += ["abelian:2,4", "abelian:2,2,2", "abelian:2,6", "abelian:2,8", "abelian:4,4", "abelian:2,2,4"]
    return [n for n in names if named_group(n).order() <= max_order]
