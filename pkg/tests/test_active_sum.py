import random

from hypothesis import given, settings, strategies as st
import pytest

import oracles
from activesum.active_sum import active_sum_presentation, realize_active_sum
from activesum.catalog import named_group
from activesum.errors import EncodingError
from activesum.families import SubgroupFamily, conjugation_closure, cyclic_family
from activesum.fp import abelianization, todd_coxeter
from activesum.groups import Subgroup, alternating_group, symmetric_group
from activesum.perm import parse_cycles

S3 = symmetric_group(3)
A4 = alternating_group(4)


def sub(G, *texts):
    return Subgroup(G, [parse_cycles(t, G.degree) for t in texts])


def a3_family():
    return SubgroupFamily(S3, [sub(S3, "(0 1 2)")])


class TestPresentation:
    def test_single_abelian_member(self):
        P = active_sum_presentation(a3_family(), "cyclic")
        assert P.generators == ["c0"]
        assert P.relators == [(1, 1, 1)]

    def test_s3_transpositions(self):
        fam = cyclic_family(S3, 2)
        P = active_sum_presentation(fam, "cyclic")
        assert P.ngens == 3
        assert P.relators[:3] == [(1, 1), (2, 2), (3, 3)]
        cross = P.relators[3:]
        assert len(cross) == 6
        assert all(len(w) == 4 for w in cross)
        # every label conjugation is mirrored by a cross relator a' b a c'
        gens = [x for _, x in P.labels]
        for w in cross:
            assert w[0] == -w[2] and w[0] < 0 < w[1] and w[3] < 0
            h, g, k = w[2] - 1, w[1] - 1, -w[3] - 1
            assert gens[g].conjugate(gens[h]) == gens[k]

    def test_cross_relators_hold_in_ambient(self):
        for fam in (cyclic_family(S3, 2), cyclic_family(A4, 3), cyclic_family(symmetric_group(4), 4)):
            for enc in ("regular", "cyclic"):
                P = active_sum_presentation(fam, enc)
                images = [x for _, x in P.labels]
                for w in P.relators:
                    assert P.evaluate(w, images, fam.ambient.identity).is_identity()

    def test_regular_generator_count(self):
        P = active_sum_presentation(cyclic_family(A4, 3), "regular")
        assert P.ngens == 8
        assert P.labels[0][0] == 0

    def test_cyclic_rejects_non_cyclic_member(self):
        S4 = symmetric_group(4)
        V = sub(S4, "(0 1)(2 3)", "(0 2)(1 3)")
        with pytest.raises(EncodingError):
            active_sum_presentation(SubgroupFamily(S4, [V]), "cyclic")
        P = active_sum_presentation(SubgroupFamily(S4, [V]), "regular")
        assert todd_coxeter(P).n_cosets == 4

    def test_unknown_encoding(self):
        with pytest.raises(ValueError):
            active_sum_presentation(a3_family(), "fancy")

    def test_single_member_whole_group(self):
        for G in (S3, A4, named_group("quaternion8")):
            P = active_sum_presentation(SubgroupFamily(G, [Subgroup(G, G.generators)]), "regular")
            assert todd_coxeter(P).n_cosets == G.order()


class TestRealize:
    def test_s3_transpositions(self):
        r = realize_active_sum(S3, cyclic_family(S3, 2), "cyclic")
        assert r.order_S == 6 and r.is_iso
        assert r.kernel_order == 1 and r.image_order == 6
        assert r.phi.is_surjective()

    def test_oracle_for_s3(self):
        gens = [g.images for g in S3.generators]
        k, rels = oracles.active_sum_relations(gens, 3, 2)
        assert oracles.word_graph_order(k, rels, 6, 4) == 6

    def test_a3_member(self):
        r = realize_active_sum(S3, a3_family(), "cyclic")
        assert r.order_S == 3
        assert not r.generating and not r.is_iso
        assert r.flags == ["not-generating"]
        assert r.image_order == 3

    def test_a4_order3_family(self):
        gens = [g.images for g in A4.generators]
        k, rels = oracles.active_sum_relations(gens, 4, 3)
        expected = oracles.word_graph_order(k, rels, 7, 5)
        assert expected is not None and expected != 12
        r = realize_active_sum(A4, cyclic_family(A4, 3), "cyclic")
        assert r.order_S == expected
        assert r.generating and not r.is_iso
        assert r.kernel_order == expected // 12
        assert r.phi.is_surjective() and not r.phi.is_injective()

    def test_phi_is_a_homomorphism_on_random_pairs(self):
        r = realize_active_sum(A4, cyclic_family(A4, 3), "cyclic")
        rng = random.Random(0)
        for _ in range(30):
            x, y = r.S.random_element(rng), r.S.random_element(rng)
            assert r.phi(x * y) == r.phi(x) * r.phi(y)

    def test_report_lines(self):
        lines = realize_active_sum(S3, cyclic_family(S3, 2)).report_lines()
        keys = [line.split("=")[0] for line in lines]
        assert "order_S" in keys and "kernel_phi" in keys and "cosets_peak" in keys
        assert "iso=true" in lines

    def test_tau_labels_generate_S(self):
        r = realize_active_sum(A4, cyclic_family(A4, 3))
        assert set(r.tau_labels) == set(r.presentation.generators)
        assert r.S.order() == r.order_S


FIXTURES = [
    ("sym3", 2),
    ("sym4", 2),
    ("sym4", 3),
    ("sym4", 4),
    ("alt4", 3),
    ("alt4", 2),
    ("dihedral 4", 2),
    ("dihedral 5", 2),
    ("dihedral 6", 2),
    ("sl 2 3", 3),
    ("sl 2 3", 4),
    ("quaternion8", 4),
    ("alt5", 5),
]


@pytest.mark.parametrize("name, m", FIXTURES)
def test_cross_checks(name, m):
    G = named_group(name)
    fam = cyclic_family(G, m)
    a = realize_active_sum(G, fam, "cyclic")
    b = realize_active_sum(G, fam, "regular")
    assert a.order_S == b.order_S
    assert a.order_S % a.image_order == 0
    for r in (a, b):
        ab = abelianization(r.presentation).order()
        if ab is not None:
            assert r.order_S % ab == 0
    rev = SubgroupFamily(G, list(reversed(fam.members)))
    assert realize_active_sum(G, rev, "cyclic").order_S == a.order_S


# --- invariants ------------------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["sym4", "alt4", "dihedral 6", "sl 2 3", "quaternion8", "abelian:2,4"]), st.data())
def test_random_cyclic_families(name, data):
    G = named_group(name)
    elems = G.elements()
    seeds = [Subgroup(G, [data.draw(st.sampled_from(elems))]) for _ in range(data.draw(st.integers(1, 2)))]
    fam = conjugation_closure(G, seeds)
    perm = data.draw(st.permutations(range(len(fam))))
    shuffled = SubgroupFamily(G, [fam[i] for i in perm])
    r = realize_active_sum(G, fam, "cyclic")
    assert realize_active_sum(G, shuffled, "cyclic").order_S == r.order_S
    assert realize_active_sum(G, fam, "regular").order_S == r.order_S
    assert r.order_S % r.image_order == 0
    ab = abelianization(r.presentation).order()
    if ab is not None:
        assert r.order_S % ab == 0
    if r.generating:
        assert r.phi.is_surjective()
        assert r.order_S % G.order() == 0


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["sym4", "alt4", "dihedral 6", "sl 2 3", "quaternion8", "cyclic 6"]), st.data())
def test_single_normal_member(name, data):
    G = named_group(name)
    x = data.draw(st.sampled_from(G.elements()))
    F = Subgroup(G, [x])
    if not F.is_normal():
        return
    r = realize_active_sum(G, SubgroupFamily(G, [F]), "regular")
    assert r.order_S == F.order()
