import itertools
from fractions import Fraction
from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import unoriented_key
from tbsl.errors import KnotNotLink
from tbsl import (
    EvenExpansion,
    LinkFamily,
    SchubertRelation,
    TwoBridgeLink,
    classify,
    detect_Ln,
    fibered_expansion,
    linking_number,
    ln_link,
    mirror,
    parse_link,
    render_link,
    schubert_oriented_equal,
    schubert_unoriented_equal,
)


class TestFromFraction:
    def test_whitehead(self):
        assert TwoBridgeLink.from_fraction(Fraction(8, 5)) == TwoBridgeLink(8, 5)

    def test_negative_denominator(self):
        assert TwoBridgeLink.from_fraction(Fraction(30, -11)) == TwoBridgeLink(30, -11)

    def test_negative_numerator_same_rational(self):
        # -30/11 and 30/-11 are the same rational, hence the same link
        assert TwoBridgeLink.from_fraction(Fraction(-30, 11)) == TwoBridgeLink(30, -11)

    def test_q_reduced_mod_2p(self):
        assert TwoBridgeLink.from_fraction(Fraction(8, 13)) == TwoBridgeLink(8, -3)
        assert schubert_oriented_equal(
            TwoBridgeLink.from_fraction(Fraction(8, 13)), TwoBridgeLink(8, -3)
        ) is SchubertRelation.ISOTOPIC

    def test_knot_rejected(self):
        with pytest.raises(KnotNotLink):
            TwoBridgeLink.from_fraction(Fraction(3, 2))

    def test_validation(self):
        with pytest.raises(ValueError):
            TwoBridgeLink(8, 4)  # even q
        with pytest.raises(ValueError):
            TwoBridgeLink(8, 9)  # out of range
        with pytest.raises(ValueError):
            TwoBridgeLink(10, 5)  # not coprime


class TestSchubert:
    def test_identity(self):
        L = TwoBridgeLink(8, 5)
        assert schubert_oriented_equal(L, L) is SchubertRelation.ISOTOPIC

    def test_inverse_clause(self):
        # 5 * (-3) = -15 ≡ 1 (mod 16)
        rel = schubert_oriented_equal(TwoBridgeLink(8, 5), TwoBridgeLink(8, -3))
        assert rel is SchubertRelation.ISOTOPIC

    def test_distinct(self):
        assert (
            schubert_oriented_equal(TwoBridgeLink(8, 5), TwoBridgeLink(8, 3))
            is SchubertRelation.DISTINCT
        )
        assert not schubert_unoriented_equal(TwoBridgeLink(8, 5), TwoBridgeLink(8, 3))

    def test_unoriented_examples(self):
        assert schubert_unoriented_equal(TwoBridgeLink(8, 5), TwoBridgeLink(8, -3))
        L = TwoBridgeLink(30, -11)
        assert schubert_unoriented_equal(L, L)

    def test_component_reversal_clause(self):
        # q' = q + p: b(30,19) vs b(30,-11)
        rel = schubert_oriented_equal(TwoBridgeLink(30, 19), TwoBridgeLink(30, -11))
        assert rel is SchubertRelation.COMPONENT_REVERSAL

    def test_unoriented_equals_oriented_clauses_over_lifts(self):
        # the mod-p test must equal the mod-2p clauses applied to both odd lifts
        for p in range(2, 202, 2):
            qs = [q for q in range(-p + 1, p, 2) if q != 0 and gcd(p, abs(q)) == 1]
            for q1, q2 in itertools.product(qs[: len(qs) // 2 + 1], qs):
                a, b = TwoBridgeLink(p, q1), TwoBridgeLink(p, q2)
                other = TwoBridgeLink(p, q2 - p if q2 > 0 else q2 + p)
                oriented_any = (
                    schubert_oriented_equal(a, b) is not SchubertRelation.DISTINCT
                    or schubert_oriented_equal(a, other) is not SchubertRelation.DISTINCT
                )
                assert schubert_unoriented_equal(a, b) == oriented_any


@st.composite
def raw_fraction(draw):
    p = draw(st.integers(min_value=1, max_value=300)) * 2
    q = draw(st.integers(min_value=-1000, max_value=1000)) * 2 + 1
    if gcd(p, abs(q)) != 1:
        q = 1
    return Fraction(draw(st.sampled_from([1, -1])) * p, q)


@given(raw_fraction())
def test_from_fraction_preserves_oriented_class(x):
    link = TwoBridgeLink.from_fraction(x)
    # rewrite with positive numerator: p/q == |num| / (sign(num) * den)
    p, q = abs(x.numerator), x.denominator * (1 if x.numerator > 0 else -1)
    assert link.p == p
    assert (link.q - q) % (2 * p) == 0  # q reduced by multiples of 2p only


@st.composite
def same_p_triple(draw):
    p = draw(st.integers(min_value=1, max_value=60)) * 2
    qs = [q for q in range(-p + 1, p, 2) if q != 0 and gcd(p, abs(q)) == 1]
    return tuple(TwoBridgeLink(p, draw(st.sampled_from(qs))) for _ in range(3))


@given(same_p_triple())
def test_unoriented_equivalence_relation(triple):
    a, b, c = triple
    assert schubert_unoriented_equal(a, a)
    assert schubert_unoriented_equal(a, b) == schubert_unoriented_equal(b, a)
    if schubert_unoriented_equal(a, b) and schubert_unoriented_equal(b, c):
        assert schubert_unoriented_equal(a, c)


@given(same_p_triple())
def test_oriented_comparison_is_symmetric(triple):
    a, b, _ = triple
    assert schubert_oriented_equal(a, b) is schubert_oriented_equal(b, a)


class TestMirror:
    def test_involution(self):
        L = TwoBridgeLink(8, 5)
        assert mirror(mirror(L)) == L

    def test_mirror_class(self):
        assert schubert_unoriented_equal(mirror(TwoBridgeLink(8, 5)), TwoBridgeLink(8, 3))

    def test_mirror_negates_expansion(self):
        for L in [TwoBridgeLink(8, 5), TwoBridgeLink(30, -11), TwoBridgeLink(12, 5)]:
            e, em = fibered_expansion(L), fibered_expansion(mirror(L))
            assert em == e.negated()

    def test_ln_is_chiral(self):
        for n in range(1, 51):
            L = ln_link(n)
            assert not schubert_unoriented_equal(L, mirror(L))


class TestFiberedExpansion:
    def test_whitehead(self):
        assert fibered_expansion(TwoBridgeLink(8, 5)) == EvenExpansion((2, -2, -2))

    def test_rewritten_family2(self):
        assert fibered_expansion(TwoBridgeLink(30, -11)) == EvenExpansion(
            (-2, -2, 2, -2, -2)
        )

    def test_small_torus(self):
        assert fibered_expansion(TwoBridgeLink(12, 5)) == EvenExpansion((2, 2, 2))

    def test_nonfibered(self):
        # b(10,3): expansions of 10/3 and 10/-7 have entries of magnitude 4
        assert fibered_expansion(TwoBridgeLink(10, 3)) is None

    def test_candidate_search_finds_every_expansion(self, links_200):
        # independent enumeration: group all ±2 sequences by unoriented
        # class and compare against the Schubert-representative search
        from fractions import Fraction as F

        from oracles import pm2_census_by_key
        from tbsl.twobridge import _candidate_expansions

        by_key = pm2_census_by_key(200)
        for L in links_200:
            expected = by_key.get(unoriented_key(L), set())
            found = {
                e.coeffs for e in _candidate_expansions(L) if e.all_plus_minus_two
            }
            assert found == expected


class TestClassify:
    def test_whitehead_is_l1(self):
        cls = classify(TwoBridgeLink(8, 5))
        assert cls.family is LinkFamily.LN and cls.n == 1
        assert cls.fibered_expansion == EvenExpansion((2, -2, -2))

    def test_family1(self):
        L = TwoBridgeLink.from_fraction(-Fraction(12, 5))
        cls = classify(L)
        assert cls.family is LinkFamily.FAMILY1 and not cls.mirrored

    def test_family1_mirrored(self):
        cls = classify(TwoBridgeLink(12, 5))
        assert cls.family is LinkFamily.FAMILY1 and cls.mirrored

    def test_torus(self):
        from tbsl import cf_eval

        L = TwoBridgeLink.from_fraction(cf_eval([2, -2, 2, -2, 2]).value)
        assert classify(L).family is LinkFamily.TORUS
        assert L.q % L.p in (1, L.p - 1)  # q ≡ ±1 shortcut cross-check

    def test_torus_tag_matches_residue_shortcut(self, links_200):
        for L in links_200:
            is_torus = classify(L).family is LinkFamily.TORUS
            assert is_torus == (L.q % L.p in (1, L.p - 1))

    def test_family2_interior_both_representatives(self):
        # the same link expands as 2,-2,-2,-2,2 and as -2,-2,2,-2,-2
        cls = classify(TwoBridgeLink(30, -11))
        assert cls.family is LinkFamily.FAMILY2_INTERIOR
        cls = classify(TwoBridgeLink(30, 19))
        assert cls.family is LinkFamily.FAMILY2_INTERIOR

    def test_ln_mirror(self):
        cls = classify(mirror(ln_link(3)))
        assert cls.family is LinkFamily.LN_MIRROR and cls.n == 3 and cls.mirrored

    def test_non_fibered(self):
        cls = classify(TwoBridgeLink(10, 3))
        assert cls.family is LinkFamily.NON_FIBERED
        assert cls.fibered_expansion is None

    def test_agreement_across_representatives(self, links_200):
        by_class = {}
        for L in links_200:
            by_class.setdefault(unoriented_key(L), []).append(L)
        for members in by_class.values():
            tags = {classify(L).tag() for L in members}
            assert len(tags) == 1, f"class of {members[0]} classified as {tags}"


class TestLinkingNumber:
    def test_whitehead(self):
        assert linking_number(EvenExpansion((2, -2, -2))) == 0

    def test_ln_family(self):
        for n in range(1, 10):
            e = fibered_expansion(ln_link(n))
            assert abs(linking_number(e)) == n - 1

    def test_family1(self):
        assert linking_number(EvenExpansion((-2, -2, -2))) == -2

    def test_requires_pm2(self):
        with pytest.raises(ValueError):
            linking_number(EvenExpansion((4, 2, 2)))

    def test_magnitude_agrees_across_representatives(self, links_200):
        for L in links_200:
            e = fibered_expansion(L)
            if e is None:
                continue
            em = fibered_expansion(mirror(L))
            assert abs(linking_number(e)) == abs(linking_number(em))


class TestDetectLn:
    def test_whitehead(self):
        assert detect_Ln(TwoBridgeLink(8, 5)) == (1, False)

    def test_n3(self):
        assert detect_Ln(TwoBridgeLink.normalized(20, -3)) == (3, False)

    def test_wrong_residue(self):
        assert detect_Ln(TwoBridgeLink(12, 5)) is None

    def test_mirrors(self):
        for n in range(1, 51):
            assert detect_Ln(ln_link(n)) == (n, False)
            assert detect_Ln(mirror(ln_link(n))) == (n, True)

    def test_agrees_with_classify(self, links_200):
        for L in links_200:
            cls = classify(L)
            hit = detect_Ln(L)
            if cls.family in (LinkFamily.LN, LinkFamily.LN_MIRROR):
                assert hit == (cls.n, cls.family is LinkFamily.LN_MIRROR)
            else:
                assert hit is None


class TestParseRender:
    def test_parse_forms(self):
        assert parse_link("b(8,5)") == TwoBridgeLink(8, 5)
        assert parse_link("L(2,-2,-2)") == TwoBridgeLink(8, 5)
        assert parse_link("8/5") == TwoBridgeLink(8, 5)
        assert parse_link("b(8, 13)") == TwoBridgeLink(8, -3)

    def test_parse_hopf(self):
        assert parse_link("L(2)") == TwoBridgeLink(2, 1)

    def test_render(self):
        assert render_link(TwoBridgeLink(8, 5)) == "b(8,5) = L(2,-2,-2) [Ln(1)]"

    def test_parse_errors(self):
        with pytest.raises(KnotNotLink):
            parse_link("b(7,3)")
        with pytest.raises(ValueError):
            parse_link("wibble")
