from fractions import Fraction
from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import even_expansion_search
from tbsl import (
    INFINITY,
    CircleInterval,
    EvenExpansion,
    Slope,
    cf_eval,
    even_expand,
    interval_between,
    parse_interval,
)


class TestSlope:
    def test_order_puts_inf_on_top(self):
        assert Slope(1) < Slope(2) < INFINITY
        assert not INFINITY < Slope(10**9)

    def test_parse_render_roundtrip(self):
        for text in ["inf", "8/5", "-30/11", "2", "0", "-1/3"]:
            assert str(Slope.parse(text)) == text

    def test_negation_and_shift(self):
        assert -Slope(Fraction(8, 5)) == Slope(Fraction(-8, 5))
        assert -INFINITY == INFINITY
        assert INFINITY.shifted(7) == INFINITY
        assert Slope(1).shifted(Fraction(1, 2)) == Slope(Fraction(3, 2))

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Slope.of(0.5)
        with pytest.raises(TypeError):
            Slope(1).shifted(0.25)
        with pytest.raises(TypeError):
            even_expand(1.6)


class TestCfEval:
    def test_whitehead_fraction(self):
        assert cf_eval([2, -2, -2]) == Slope(Fraction(8, 5))

    def test_single_term(self):
        assert cf_eval([2]) == Slope(2)

    def test_rewritten_family2_fraction(self):
        assert cf_eval([-2, -2, 2, -2, -2]) == Slope(Fraction(-30, 11))

    def test_vanishing_tail_gives_inf(self):
        # 1 + 1/(-1 + 1/1) has tail -1 + 1 = 0, so the value is 1 + inf = inf
        assert cf_eval([1, -1, 1]) == INFINITY

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cf_eval([])

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            cf_eval([2, 0, 2])


class TestEvenExpand:
    @pytest.mark.parametrize(
        "value, expansion",
        [
            (Fraction(8, 5), (2, -2, -2)),
            (Fraction(2), (2,)),
            (Fraction(-30, 11), (-2, -2, 2, -2, -2)),
            (Fraction(30, 19), (2, -2, -2, -2, 2)),
            (Fraction(12, 5), (2, 2, 2)),
        ],
    )
    def test_known_expansions(self, value, expansion):
        assert even_expand(value).coeffs == expansion

    def test_matches_exhaustive_search(self):
        for value in [Fraction(8, 5), Fraction(-30, 11), Fraction(70, 29), Fraction(4)]:
            found = even_expansion_search(value, 9)
            assert found == [even_expand(value).coeffs]

    @pytest.mark.parametrize("bad", [Fraction(3, 5), Fraction(5), Fraction(0)])
    def test_parity_violations_rejected(self, bad):
        with pytest.raises(ValueError):
            even_expand(bad)

    def test_small_values_rejected(self):
        # |x| <= 1 admits no expansion with nonzero even entries
        with pytest.raises(ValueError):
            even_expand(Fraction(2, 5))
        assert even_expansion_search(Fraction(2, 5), 9) == []


@st.composite
def even_over_odd(draw):
    p = draw(st.integers(min_value=1, max_value=5000)) * 2
    q = draw(st.integers(min_value=0, max_value=(p - 2) // 2)) * 2 + 1
    if gcd(p, q) != 1:
        q = 1
    sign = draw(st.sampled_from([1, -1]))
    return Fraction(sign * p, q)


@given(even_over_odd())
def test_roundtrip_cf_eval_even_expand(x):
    e = even_expand(x)
    assert len(e) % 2 == 1
    assert cf_eval(e.coeffs) == Slope(x)


@given(even_over_odd(), st.integers(min_value=-6, max_value=6))
def test_even_expansion_is_unique_in_search_window(x, _seed):
    found = even_expansion_search(x, 7)
    e = even_expand(x)
    if len(e) <= 7:
        assert found == [e.coeffs]
    else:
        assert found == []


class TestEvenExpansionType:
    def test_validation(self):
        with pytest.raises(ValueError):
            EvenExpansion((2, -2))  # even length
        with pytest.raises(ValueError):
            EvenExpansion((2, 3, 2))  # odd entry
        with pytest.raises(ValueError):
            EvenExpansion((2, 0, 2))  # zero entry

    def test_helpers(self):
        e = EvenExpansion((2, -2, -2))
        assert e.halves() == (1, -1, -1)
        assert e.all_plus_minus_two
        assert e.negated().coeffs == (-2, 2, 2)
        assert e.reversed_().coeffs == (-2, -2, 2)


class TestCircleInterval:
    def test_arc_through_infinity(self):
        arc = CircleInterval.open(INFINITY, 1)
        assert arc.contains(Fraction(-1000))
        assert arc.contains(0)
        assert not arc.contains(1)
        assert not arc.contains(2)
        assert not arc.contains(INFINITY)

    def test_wrapping_arc(self):
        arc = CircleInterval.open(2, -2)
        assert arc.contains(3)
        assert arc.contains(INFINITY)
        assert arc.contains(-3)
        assert not arc.contains(0)

    def test_point_and_punctured(self):
        assert CircleInterval.point(5).contains(5)
        assert not CircleInterval.point(5).contains(6)
        punctured = CircleInterval.punctured(INFINITY)
        assert punctured.contains(123)
        assert not punctured.contains(INFINITY)

    def test_mixed_degenerate_rejected(self):
        with pytest.raises(ValueError):
            CircleInterval(Slope(1), Slope(1), True, False)

    def test_full_circle(self):
        assert CircleInterval.full().contains(INFINITY)
        assert CircleInterval.full().contains(Fraction(7, 3))

    def test_render_parse_roundtrip(self):
        for iv in [
            CircleInterval.open(INFINITY, 1),
            CircleInterval.closed(0, 1),
            CircleInterval(Slope(1), INFINITY, False, True),
            CircleInterval.point(Fraction(-1, 3)),
            CircleInterval.punctured(INFINITY),
            CircleInterval.full(),
        ]:
            assert parse_interval(str(iv)) == iv

    def test_negated(self):
        assert CircleInterval.open(INFINITY, 1).negated() == CircleInterval.open(-1, INFINITY)
        assert CircleInterval.closed(2, INFINITY).negated() == CircleInterval.closed(
            INFINITY, -2
        )


class TestIntervalBetween:
    def test_arc_avoiding_two(self):
        arc = interval_between(INFINITY, 1, 2)
        assert arc == CircleInterval.closed(INFINITY, 1)
        assert arc.contains(INFINITY) and arc.contains(1) and arc.contains(-7)
        assert not arc.contains(2)

    def test_finite_arc(self):
        assert interval_between(0, 1, INFINITY) == CircleInterval.closed(0, 1)

    def test_complementary_arc(self):
        arc = interval_between(INFINITY, 1, -5)
        assert arc == CircleInterval.closed(1, INFINITY)
        assert arc.contains(2) and arc.contains(3)
        assert not arc.contains(-5)

    def test_degenerate_arguments_rejected(self):
        with pytest.raises(ValueError):
            interval_between(1, 1, 0)
        with pytest.raises(ValueError):
            interval_between(0, 1, 1)


_POINTS = [Slope(Fraction(n, d)) for n in range(-4, 5) for d in (1, 2, 3)] + [INFINITY]


@given(
    st.sampled_from(_POINTS),
    st.sampled_from(_POINTS),
    st.sampled_from(_POINTS),
    st.sampled_from(_POINTS),
)
def test_complementary_arcs_partition_circle(a, b, avoid, probe):
    if a == b or avoid in (a, b):
        return
    first = interval_between(a, b, avoid)
    second = interval_between(b, a, _interior_point(first))
    assert first.contains(probe) or second.contains(probe)
    if first.contains(probe) and second.contains(probe):
        assert probe in (a, b)


def _interior_point(arc):
    # midpoint of a closed arc between distinct endpoints, wrapping at inf
    lo, hi = arc.lo, arc.hi
    if lo.is_infinity:
        return Slope(hi.value - 1)
    if hi.is_infinity:
        return Slope(lo.value + 1)
    if lo < hi:
        return Slope((lo.value + hi.value) / 2)
    return INFINITY


@given(st.sampled_from(_POINTS), st.sampled_from(_POINTS), st.sampled_from(_POINTS))
def test_membership_matches_linear_order_off_infinity(lo, hi, probe):
    if lo == hi or lo.is_infinity or hi.is_infinity or hi < lo:
        return
    arc = CircleInterval.closed(lo, hi)
    # no inf in the interior: membership is the plain order condition
    if not probe.is_infinity:
        assert arc.contains(probe) == (lo <= probe <= hi)
    else:
        assert not arc.contains(probe)
