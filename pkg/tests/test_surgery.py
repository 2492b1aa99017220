import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from tbsl import (
    INFINITY,
    Framing,
    Slope,
    SurgeryDiagram,
    drilled_longitude,
    framing_convert,
    homological_longitude,
    is_qhs,
    presentation_matrix,
    rolfsen_fill,
)
from tbsl.errors import FramingMismatch, UnsupportedSlope

# the three auxiliary links whose surgery chains are replayed in the tests:
# the seed of the exceptional family, the all-negative companion, and the
# strip-cover companion
LN_SEED_LK = ((0, 0, 1), (0, 0, 1), (1, 1, 0))
FAMILY1_LK = ((0, -1, 1), (-1, 0, -1), (1, -1, 0))
LN_STRIP_LK = ((0, 1, 1), (1, 0, -1), (1, -1, 0))


def diagram(lk, slopes, framing=Framing.CANONICAL):
    return SurgeryDiagram(lk, tuple(None if s is None else Slope.of(s) for s in slopes), framing)


class TestDiagram:
    def test_validation(self):
        with pytest.raises(ValueError):
            diagram(((1, 0), (0, 0)), (1, 1))  # nonzero diagonal
        with pytest.raises(ValueError):
            diagram(((0, 1), (2, 0)), (1, 1))  # asymmetric
        with pytest.raises(ValueError):
            diagram(((0, 1), (1, 0)), (1, 1, 1))  # slope count mismatch

    def test_json_roundtrip(self):
        d = diagram(LN_SEED_LK, (1, "inf", None))
        assert SurgeryDiagram.from_json_dict(d.to_json_dict()) == d


class TestFramingConvert:
    def test_family1_diagram_shift(self):
        d = diagram(FAMILY1_LK, ("5", "7", "-1"), Framing.SEIFERT)
        out = framing_convert(d, Framing.CANONICAL)
        assert out.slopes == (Slope(5), Slope(9), Slope(-1))

    def test_zero_linking_is_identity(self):
        d = diagram(((0, 0), (0, 0)), ("1/2", -3), Framing.SEIFERT)
        assert framing_convert(d, Framing.CANONICAL).slopes == d.slopes

    def test_ln_strip_diagram_shift(self):
        d = diagram(LN_STRIP_LK, (7, -2, Fraction(-1, 4)), Framing.SEIFERT)
        out = framing_convert(d, Framing.CANONICAL)
        assert out.slopes == (Slope(5), Slope(-2), Slope(Fraction(-1, 4)))

    def test_infinity_fixed(self):
        d = diagram(FAMILY1_LK, ("inf", 0, 1), Framing.SEIFERT)
        assert framing_convert(d, Framing.CANONICAL).slopes[0] == INFINITY

    @given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
    def test_bijection(self, lk12, lk13, lk23, a):
        lk = ((0, lk12, lk13), (lk12, 0, lk23), (lk13, lk23, 0))
        d = diagram(lk, (a, Fraction(1, 3), "inf"), Framing.SEIFERT)
        there = framing_convert(d, Framing.CANONICAL)
        back = framing_convert(there, Framing.SEIFERT)
        assert back == d


class TestRolfsenFill:
    def test_ln_seed_coefficients(self):
        # (1, 1, -1/m) fills to (1+m, 1+m) with the linking updated to m
        for m in range(1, 31):
            d = diagram(LN_SEED_LK, (1, 1, Fraction(-1, m)))
            out = rolfsen_fill(d, 2)
            assert out.slopes == (Slope(1 + m), Slope(1 + m))
            assert out.linking[0][1] == m

    def test_infinity_fill_is_plain_deletion(self):
        d = diagram(LN_SEED_LK, (1, 1, "inf"))
        out = rolfsen_fill(d, 2)
        assert out.slopes == (Slope(1), Slope(1))
        assert out.linking == ((0, 0), (0, 0))

    def test_family1_coefficients(self):
        d = diagram(FAMILY1_LK, ("5", "9", -1))
        out = rolfsen_fill(d, 2)
        assert out.slopes == (Slope(6), Slope(10))
        assert out.linking[0][1] == -2

    def test_strip_diagram_coefficients(self):
        for n in range(2, 12):
            seifert = diagram(LN_STRIP_LK, (0, 0, Fraction(-1, n)), Framing.SEIFERT)
            out = rolfsen_fill(framing_convert(seifert, Framing.CANONICAL), 2)
            assert out.slopes == (Slope(n - 2), Slope(n))
            assert abs(out.linking[0][1]) == n - 1

    def test_bad_slopes_rejected(self):
        with pytest.raises(UnsupportedSlope):
            rolfsen_fill(diagram(LN_SEED_LK, (1, 1, Fraction(2, 3))), 2)
        with pytest.raises(FramingMismatch):
            rolfsen_fill(diagram(LN_SEED_LK, (1, 1, -1), Framing.SEIFERT), 2)

    @pytest.mark.parametrize("lk", [LN_SEED_LK, FAMILY1_LK, LN_STRIP_LK])
    def test_fill_preserves_homology(self, lk):
        rng = random.Random(7)
        for m in range(1, 31):
            a = Fraction(rng.randrange(-9, 10), rng.randrange(1, 4))
            b = Fraction(rng.randrange(-9, 10) * 2 + 1, 1)
            d = diagram(lk, (a, b, Fraction(-1, m)))
            full = presentation_matrix(d)
            filled = presentation_matrix(rolfsen_fill(d, 2))
            assert filled.order == full.order


class TestPresentation:
    def test_ln_seed_determinant(self):
        d = diagram(LN_SEED_LK, (1, 1, Fraction(7, 3)))
        assert abs(presentation_matrix(d).determinant) == abs(7 - 2 * 3)

    def test_all_infinity_is_trivial(self):
        d = diagram(LN_SEED_LK, ("inf", "inf", "inf"))
        report = presentation_matrix(d)
        assert report.presentation == () and report.order == 1

    def test_two_component_formula(self):
        d = diagram(((0, 3), (3, 0)), (Fraction(5, 2), Fraction(7, 4)))
        assert presentation_matrix(d).determinant in (5 * 7 - 2 * 4 * 9, -(5 * 7 - 2 * 4 * 9))

    def test_report_json(self):
        d = diagram(((0, 0), (0, 0)), (0, 5))
        out = presentation_matrix(d).to_json_dict()
        assert out["order"] == "infinite" and out["determinant"] == 0


class TestQhs:
    def test_whitehead_zero_slope(self):
        assert not is_qhs(diagram(((0, 0), (0, 0)), (0, 5)))

    def test_all_infinity_is_sphere(self):
        assert is_qhs(diagram(((0, 0), (0, 0)), ("inf", "inf")))

    def test_ln_corner(self):
        for n in range(1, 20):
            lk = n - 1
            assert is_qhs(diagram(((0, lk), (lk, 0)), (n, n)))

    def test_zero_infinity_pair(self):
        assert not is_qhs(diagram(((0, 2), (2, 0)), (0, "inf")))
        assert is_qhs(diagram(((0, 2), (2, 0)), (1, "inf")))

    @given(
        st.integers(-30, 30),
        st.integers(1, 9),
        st.integers(-30, 30),
        st.integers(1, 9),
        st.integers(-6, 6),
    )
    def test_matches_determinant(self, p1, q1, p2, q2, lk):
        d = diagram(((0, lk), (lk, 0)), (Fraction(p1, q1), Fraction(p2, q2)))
        det = presentation_matrix(d).determinant
        assert is_qhs(d) == (det != 0)


class TestLongitudes:
    def test_formula(self):
        assert homological_longitude(0, Fraction(5)) == Slope(0)
        assert homological_longitude(3, Fraction(-2)) == Slope(Fraction(-9, 2))
        for n in range(2, 10):
            assert homological_longitude(n - 1, Fraction(n)) == Slope(
                Fraction((n - 1) ** 2, n)
            )

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            homological_longitude(2, Fraction(0))

    def test_drilled_ln_seed(self):
        d = diagram(LN_SEED_LK, (1, 1, None))
        assert drilled_longitude(d, 2) == Slope(2)

    def test_drilled_matches_det_zero(self):
        d = diagram(LN_SEED_LK, (1, 1, None))
        for p in range(-8, 9):
            for q in range(1, 6):
                filled = presentation_matrix(d.with_slope(2, Slope(Fraction(p, q))))
                assert (filled.determinant == 0) == (Fraction(p, q) == 2)
