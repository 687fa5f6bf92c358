"""Active sums of conjugation-closed families and their realization.

The active sum of a family is the free product of its members modulo the
relators ``h^-1 g h (g^h)^-1`` (h in F1, g in F2, g^h read in F2^h), so
inner conjugation agrees with conjugation in the ambient group. It is
realized here as the regular permutation representation given by coset
enumeration over the trivial subgroup.
"""

from dataclasses import dataclass, field

from .errors import EncodingError, FamilyError, NotAHomomorphism
from .families import is_generating
from .fp import DEFAULT_BUDGET, Presentation, power_word, todd_coxeter
from .groups import ENUMERATION_CUTOFF, Homomorphism, PermGroup, conjugate_subgroup
from .perm import format_cycles

ENCODINGS = ("regular", "cyclic")


def _conjugate_member(fam, i, h):
    j = fam.index_of(conjugate_subgroup(fam.members[i], h))
    if j is None:
        raise FamilyError(f"member {i} conjugated by {format_cycles(h)} is not in the family")
    return j


def active_sum_presentation(fam, encoding="regular", cutoff=ENUMERATION_CUTOFF):
    """Presentation of the active sum of ``fam``.

    ``regular``: one generator per nontrivial element of each member, the
    member's multiplication table, and a cross relator for every ordered pair
    of members and nontrivial h in F1, g in F2.

    ``cyclic``: one generator per member (members must be cyclic), the power
    relator, and one cross relator per ordered pair of member generators. The
    remaining cross relators of the regular encoding follow from these, since
    conjugation by h^k is the k-th power of conjugation by h and conjugating a
    power gives the power of the conjugate.

    Labels record (member index, ambient element) for every generator.
    """
    if encoding not in ENCODINGS:
        raise ValueError(f"encoding must be one of {ENCODINGS}")
    if encoding == "cyclic":
        return _cyclic_presentation(fam)
    return _regular_presentation(fam, cutoff)


def _regular_presentation(fam, cutoff):
    names, labels = [], []
    gen_of = []  # per member: element -> generator index (identity absent)
    for i, F in enumerate(fam.members):
        table = {}
        for k, x in enumerate(x for x in sorted(F.elements(cutoff)) if not x.is_identity()):
            table[x] = len(names)
            names.append(f"f{i}_{k}")
            labels.append((i, x))
        gen_of.append(table)

    def letter(i, x, inverse=False):
        k = gen_of[i].get(x)
        if k is None:
            return ()
        return (-(k + 1),) if inverse else (k + 1,)

    rels = []
    for i, F in enumerate(fam.members):
        elems = list(gen_of[i])
        for x in elems:
            for y in elems:
                rels.append(letter(i, x) + letter(i, y) + letter(i, x * y, True))
    for i1, F1 in enumerate(fam.members):
        for h in gen_of[i1]:
            for i2, F2 in enumerate(fam.members):
                j = _conjugate_member(fam, i2, h)
                for g in gen_of[i2]:
                    gh = g.conjugate(h)
                    if gh not in gen_of[j]:
                        raise FamilyError(f"{format_cycles(gh)} missing from member {j}")
                    rels.append(letter(i1, h, True) + letter(i2, g) + letter(i1, h) + letter(j, gh, True))
    return Presentation(names, rels, labels)


def _cyclic_presentation(fam):
    names, labels, gens, orders = [], [], [], []
    for i, F in enumerate(fam.members):
        c = F.cyclic_generator()
        if c is None:
            raise EncodingError(f"member {i} is not cyclic")
        names.append(f"c{i}")
        labels.append((i, c))
        gens.append(c)
        orders.append(F.order())
    powers = []
    for c, m in zip(gens, orders):
        x = c.inverse() * c  # identity of the right degree
        table = {}
        for k in range(m):
            table[x] = k
            x = x * c
        powers.append(table)
    rels = [power_word(i, m) for i, m in enumerate(orders)]
    for i1, h in enumerate(gens):
        for i2, g in enumerate(gens):
            j = _conjugate_member(fam, i2, h)
            k = powers[j].get(g.conjugate(h))
            if k is None:
                raise FamilyError(f"conjugate of member {i2} generator not in member {j}")
            if 2 * k > orders[j]:
                k -= orders[j]
            rels.append((-(i1 + 1), i2 + 1, i1 + 1) + power_word(j, -k))
    return Presentation(names, rels, labels)


@dataclass
class ActiveSumResult:
    """The realized active sum S with the canonical map phi: S -> G."""

    S: PermGroup
    order_S: int
    phi: Homomorphism
    tau_labels: dict
    presentation: Presentation
    encoding: str
    image_order: int
    kernel_order: int
    generating: bool
    is_iso: bool
    table_stats: dict = field(default_factory=dict)

    @property
    def flags(self):
        out = []
        if not self.generating:
            out.append("not-generating")
        return out

    def report_lines(self):
        lines = [
            f"encoding={self.encoding}",
            f"presentation_generators={self.presentation.ngens}",
            f"presentation_relators={len(self.presentation.relators)}",
            f"order_S={self.order_S}",
            f"image_phi={self.image_order}",
            f"kernel_phi={self.kernel_order}",
            f"generating={str(self.generating).lower()}",
            f"iso={str(self.is_iso).lower()}",
        ]
        for k in ("cosets_final", "cosets_peak", "coincidences", "deductions"):
            lines.append(f"{k}={self.table_stats[k]}")
        return lines


def realize_active_sum(G, fam, encoding="cyclic", budget=DEFAULT_BUDGET, strategy="hlt"):
    """Build, enumerate and map the active sum of ``fam`` onto its image in G.

    phi sends each presentation generator to its ambient label. It is checked
    to be a homomorphism by evaluating every relator in G, which suffices
    because the enumeration shows S is presented by exactly these relators.
    A non-generating family is reported through ``generating=False``; phi then
    maps onto the proper subgroup generated by the family.
    """
    P = active_sum_presentation(fam, encoding)
    table = todd_coxeter(P, [], budget=budget, strategy=strategy)
    perms = table.generator_perms()
    S = PermGroup(perms, degree=table.n_cosets, name="active sum")
    images = [x for _, x in P.labels]
    for w in P.relators:
        if not P.evaluate(w, images, G.identity).is_identity():
            raise NotAHomomorphism(f"relator {P.word_str(w)} does not hold in the ambient group")
    phi = Homomorphism(S, G, images, check=False)
    order_S = table.n_cosets
    image_order = PermGroup(images, degree=G.degree).order() if images else 1
    generating = is_generating(fam)
    return ActiveSumResult(
        S=S,
        order_S=order_S,
        phi=phi,
        tau_labels=dict(zip(P.generators, perms)),
        presentation=P,
        encoding=encoding,
        image_order=image_order,
        kernel_order=order_S // image_order,
        generating=generating,
        is_iso=generating and order_S == G.order(),
        table_stats=table.stats,
    )
