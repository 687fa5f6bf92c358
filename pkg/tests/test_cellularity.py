import itertools

from hypothesis import given, settings, strategies as st
import pytest

import oracles
from activesum.catalog import named_group
from activesum.cellularity import (
    SchurData,
    certify_theorem2,
    corollary1_check,
    corollary2_check,
    divisor_lift,
    divisors,
    hom_induced_map,
    is_cn_equivalence,
    is_cn_generated,
    is_cn_injection,
    is_cn_trivial,
    lemma1_sweep,
    lemma1a_check,
    lemma1b_check,
    prime_divisors,
    self_cellular,
    verify_certificate,
)
from activesum.errors import DivisibilityError, HypothesisViolation, MissingSchurData, ParseError
from activesum.families import SubgroupFamily, conjugation_closure, coxeter_matrix, coxeter_reflection_family, cyclic_family
from activesum.groups import (
    Homomorphism,
    PermGroup,
    Subgroup,
    alternating_group,
    cyclic_group,
    enumerate_homs,
    symmetric_group,
)
from activesum.perm import parse_cycles

S3 = symmetric_group(3)
S4 = symmetric_group(4)
A4 = alternating_group(4)
C2, C3, C6 = cyclic_group(2), cyclic_group(3), cyclic_group(6)
SCHUR = SchurData.bundled()


def P(text, d):
    return parse_cycles(text, d)


def projection_c6_c3():
    return Homomorphism(C6, C3, [C3.generators[0]])


def inclusion_a3():
    return Homomorphism(C3, S3, [P("(0 1 2)", 3)])


def sign_map():
    t = C2.generators[0]
    return Homomorphism(S3, C2, [t if g.sign() < 0 else C2.identity for g in S3.generators])


def transpositions(G):
    return conjugation_closure(G, [Subgroup(G, [P("(0 1)", G.degree)])])


def identity_hom(G):
    return Homomorphism(G, G, list(G.generators))


def oracle_restriction(f, n):
    """(injective, bijective) of f on n-torsion, via tuple closure."""
    src = oracles.closure([g.images for g in f.source.generators], f.source.degree)
    tgt = oracles.closure([g.images for g in f.target.generators], f.target.degree)
    e_s, e_t = oracles.identity(f.source.degree), oracles.identity(f.target.degree)
    X = [x for x in src if oracles.power(x, n) == e_s]
    Y = {y for y in tgt if oracles.power(y, n) == e_t}
    from activesum.perm import Perm
    imgs = [f(Perm(x)).images for x in X]
    inj = len(set(imgs)) == len(imgs)
    return inj, inj and set(imgs) == Y


class TestArithmetic:
    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]

    def test_prime_divisors(self):
        assert prime_divisors(1) == []
        assert prime_divisors(12) == [2, 3]
        assert prime_divisors(97) == [97]


class TestPredicates:
    def test_equivalence_examples(self):
        assert is_cn_equivalence(identity_hom(C2), 2)
        assert not is_cn_equivalence(projection_c6_c3(), 2)
        assert is_cn_equivalence(inclusion_a3(), 3)
        assert oracle_restriction(projection_c6_c3(), 2) == (False, False)
        assert oracle_restriction(inclusion_a3(), 3) == (True, True)

    def test_injection_examples(self):
        inc = Homomorphism(C2, S3, [P("(0 1)", 3)])
        assert is_cn_injection(inc, 2)
        assert not is_cn_injection(projection_c6_c3(), 2)
        assert is_cn_injection(projection_c6_c3(), 3)

    def test_trivial_examples(self):
        assert is_cn_trivial(inclusion_a3(), 2)
        assert not is_cn_trivial(sign_map(), 2)
        triv = Homomorphism(S3, C6, [C6.identity, C6.identity])
        for n in range(1, 7):
            assert is_cn_trivial(triv, n)

    def test_generated_examples(self):
        assert is_cn_generated(S3, 2)
        assert not is_cn_generated(S3, 3)
        assert not is_cn_generated(C3, 2)
        assert is_cn_generated(A4, 3)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            is_cn_equivalence(identity_hom(C2), 0)


class TestDivisorLemma:
    def test_1a_identity(self):
        r = lemma1a_check(identity_hom(C6), 6)
        assert r.applicable and r.passed
        assert list(r.results) == [1, 2, 3, 6]

    def test_1a_inclusion(self):
        r = lemma1a_check(inclusion_a3(), 3)
        assert r.applicable and r.results == {1: True, 3: True}
        assert str(r) == "lemma1a n=3 m=1:pass m=3:pass"

    def test_1a_not_applicable(self):
        r = lemma1a_check(projection_c6_c3(), 2)
        assert not r.applicable
        assert "not applicable" in str(r)

    def test_1b_examples(self):
        assert lemma1b_check(identity_hom(C6), 6, 2).holds
        r = lemma1b_check(projection_c6_c3(), 6, 2)
        assert not r.premise and r.holds
        r = lemma1b_check(inclusion_a3(), 3, 1)
        assert r.premise and r.conclusion

    def test_1b_divisibility(self):
        with pytest.raises(DivisibilityError):
            lemma1b_check(identity_hom(C6), 6, 4)

    def test_sweep_small_catalog(self):
        groups = {name: named_group(name) for name in ["cyclic 1", "cyclic 2", "cyclic 4", "sym3", "klein4"]}
        report = lemma1_sweep(groups, (2, 4))
        assert report.violations == 0
        assert report.equivalences > 0
        assert report.pairs == 25

    def test_sweep_trivial_catalog(self):
        report = lemma1_sweep({"cyclic 1": named_group("cyclic 1")})
        assert report.homs == 1 and report.violations == 0
        assert report.lines()[-1] == "violations=0"


class TestCertificates:
    def test_s3_transpositions(self):
        cert = certify_theorem2(S3, cyclic_family(S3, 2), 2)
        assert cert.rule == "ActiveSum"
        assert cert.facts["order_S"] == 6 and cert.facts["iso"]
        assert [c.rule for c in cert.children] == ["DivisorLift"] * 3
        assert cert.children[0].children[0].rule == "SelfCellular"
        assert verify_certificate(cert).accepted

    def test_exponent_violation(self):
        with pytest.raises(HypothesisViolation) as exc:
            certify_theorem2(S3, SubgroupFamily(S3, [Subgroup(S3, [P("(0 1 2)", 3)])]), 2)
        assert exc.value.hypothesis == "exponent_divides"

    def test_closure_violation(self):
        fam = SubgroupFamily(S3, [Subgroup(S3, [P("(0 1)", 3)])], validate=False)
        with pytest.raises(HypothesisViolation) as exc:
            certify_theorem2(S3, fam, 2)
        assert exc.value.hypothesis == "conjugation_closed"

    def test_distinct_violation(self):
        H = Subgroup(S3, [P("(0 1 2)", 3)])
        fam = SubgroupFamily(S3, [H, Subgroup(S3, [P("(0 2 1)", 3)])], validate=False)
        with pytest.raises(HypothesisViolation) as exc:
            certify_theorem2(S3, fam, 3)
        assert exc.value.hypothesis == "distinct"

    def test_a4_names_S(self):
        cert = certify_theorem2(A4, cyclic_family(A4, 3), 3)
        assert not cert.facts["iso"]
        assert cert.facts["order_S"] == cert.group.order() != 12
        assert cert.subject == cert.group.fingerprint()
        assert "order=12" not in cert.subject

    def test_lift_from_divisor(self):
        # order-2 members certified at n = 4 go through a 2 -> 4 lift
        cert = certify_theorem2(S3, cyclic_family(S3, 2), 4)
        lift = cert.children[0]
        assert lift.rule == "DivisorLift" and lift.n == 4 and lift.facts["m"] == 2
        assert verify_certificate(cert).accepted
        with pytest.raises(DivisibilityError):
            divisor_lift(self_cellular(3), 4, "x")

    def test_non_cyclic_member_needs_certificate(self):
        V = Subgroup(S4, [P("(0 1)(2 3)", 4), P("(0 2)(1 3)", 4)])
        fam = SubgroupFamily(S4, [V])
        with pytest.raises(HypothesisViolation) as exc:
            certify_theorem2(S4, fam, 2)
        assert exc.value.hypothesis == "member_cellular"

    def test_supplied_member_certificate(self):
        V4 = PermGroup([P("(0 1)(2 3)", 4), P("(0 2)(1 3)", 4)], degree=4)
        # all three order-2 subgroups would give C2^3; two of them give V4 itself
        assert certify_theorem2(V4, cyclic_family(V4, 2), 2).facts["order_S"] == 8
        pair = SubgroupFamily(V4, [Subgroup(V4, [g]) for g in V4.generators])
        inner = certify_theorem2(V4, pair, 2)
        assert inner.facts["iso"]
        V = Subgroup(S4, list(V4.generators))
        cert = certify_theorem2(S4, SubgroupFamily(S4, [V]), 2, member_certificates={0: inner})
        assert cert.facts["encoding"] == "regular"
        assert cert.facts["order_S"] == 4
        assert verify_certificate(cert).accepted
        lifted = certify_theorem2(S4, SubgroupFamily(S4, [V]), 4, member_certificates={0: inner})
        assert lifted.children[0].rule == "DivisorLift"
        assert verify_certificate(lifted).accepted

    def test_verifier_rejects_tampering(self):
        cert = certify_theorem2(S3, cyclic_family(S3, 2), 2)
        cert.facts["order_S"] = 12
        report = verify_certificate(cert)
        assert not report.accepted
        assert report.failures() == ["order_S"]

    def test_verifier_rejects_bad_lift(self):
        cert = certify_theorem2(S3, cyclic_family(S3, 2), 2)
        cert.children[1].facts["m"] = 3
        assert not verify_certificate(cert).accepted

    def test_serialization_is_deterministic(self):
        a = certify_theorem2(S4, transpositions(S4), 2).serialize()
        b = certify_theorem2(S4, transpositions(S4), 2).serialize()
        assert a == b
        assert a.startswith("ActiveSum n=2 subject=[order=24 ")
        assert "  member 0:" in a and "from:" in a


class TestSchur:
    def test_parse(self):
        data = SchurData.parse("# literature\nsym4: 2\nalt5: 2\nsym3:\n")
        assert data.factors("sym3") == ()
        assert data.factors("sym4") == (2,)
        with pytest.raises(MissingSchurData):
            data.factors("alt6")

    @pytest.mark.parametrize("text, line", [("sym4 2\n", 1), ("a: 2\nb: x\n", 2), ("a: 1\n", 1), ("a: 2\na: 2\n", 2)])
    def test_parse_errors(self, text, line):
        with pytest.raises(ParseError) as exc:
            SchurData.parse(text)
        assert exc.value.line == line

    def test_identify_by_signature(self):
        W, _ = coxeter_reflection_family(coxeter_matrix("A3"))
        names, factors = SCHUR.identify(W)
        assert "sym4" in names and factors == (2,)

    def test_identify_refuses_conflicts(self):
        data = SchurData.parse("sym3: \nsl:2:2: 2\n")
        with pytest.raises(MissingSchurData):
            data.identify(S3)

    def test_identify_missing(self):
        with pytest.raises(MissingSchurData):
            SchurData.parse("sym3:\n").identify(A4)


class TestCorollaries:
    def test_cor1_s4(self):
        W, fam = coxeter_reflection_family(coxeter_matrix("A3"))
        r = corollary1_check(certify_theorem2(W, fam, 2), SCHUR)
        assert r.passed and r.schur_primes == [2] and r.n_primes == [2]

    def test_cor1_trivial_multiplier(self):
        r = corollary1_check(certify_theorem2(S3, cyclic_family(S3, 2), 2), SCHUR)
        assert r.schur_factors == () and r.passed

    def test_cor1_fail_flag(self):
        cert = certify_theorem2(S3, SubgroupFamily(S3, [Subgroup(S3, [P("(0 1 2)", 3)])]), 3)
        r = corollary1_check(cert, SchurData.parse("hypothetical: 2\n"), name="hypothetical")
        assert not r.passed
        assert "cor1_pass=false" in r.lines()

    def test_cor2_s4(self):
        r = corollary2_check(S4, transpositions(S4), 2, SCHUR)
        assert r.hypotheses_met and r.injection and r.iso and r.passed

    def test_cor2_s4_all_involutions(self):
        # all order-2 subgroups give an active sum of order 48; phi is then not a C_2-injection
        r = corollary2_check(S4, cyclic_family(S4, 2), 2, SCHUR)
        assert r.hypotheses_met and not r.iso and not r.injection and r.passed

    def test_cor2_s3(self):
        r = corollary2_check(S3, cyclic_family(S3, 2), 2, SCHUR)
        assert r.schur_factors == () and r.passed

    def test_cor2_a4_hypotheses_not_met(self):
        r = corollary2_check(A4, cyclic_family(A4, 3), 3, SCHUR)
        assert not r.hypotheses_met
        assert any("hypotheses not met" in line for line in r.lines())

    def test_cor2_requires_generating(self):
        with pytest.raises(HypothesisViolation):
            corollary2_check(S3, SubgroupFamily(S3, [Subgroup(S3, [P("(0 1 2)", 3)])]), 3, SCHUR)


# --- invariants ------------------------------------------------------------------

CATALOG = ["cyclic 1", "cyclic 2", "cyclic 3", "cyclic 4", "cyclic 6", "klein4", "sym3", "dihedral 4", "quaternion8"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(itertools.product(CATALOG, CATALOG))), st.integers(0, 10**6), st.sampled_from([1, 2, 3, 4, 6]))
def test_torsion_shortcut_matches_brute_force(pair, pick, n):
    X, Y = named_group(pair[0]), named_group(pair[1])
    homs = enumerate_homs(X, Y)
    f = homs[pick % len(homs)]
    injective, surjective = hom_induced_map(f, n)
    assert is_cn_injection(f, n) == injective
    assert is_cn_equivalence(f, n) == (injective and surjective)
    assert (is_cn_injection(f, n), is_cn_equivalence(f, n)) == oracle_restriction(f, n)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["sym3", "sym4", "alt4", "dihedral 5", "dihedral 6", "sl 2 3", "quaternion8"]), st.sampled_from([2, 3, 4, 6]))
def test_certified_groups_are_generated(name, n):
    G = named_group(name)
    fam = SubgroupFamily(G, [F for m in divisors(n) if m > 1 for F in cyclic_family(G, m)])
    if not len(fam):
        return
    cert = certify_theorem2(G, fam, n)
    assert is_cn_generated(cert.group, n)
    assert verify_certificate(cert).accepted
