import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brieskorn_tight import slopes
from brieskorn_tight.slopes import (
    INFINITY,
    NcfExpansion,
    Slope,
    SlopeError,
    UnimodularMatrix,
    attach_map_v1,
    attach_map_v2,
    attach_map_v3,
    edge_rounding_candidates,
    eval_ncf,
    fiber_monodromy,
    max_twisting_values,
    mobius_apply,
    neg_continued_fraction,
    normalize_slope,
    slope_from_value,
    tight_count_solid_torus,
    upper_bound_count,
)


def ncf_oracle(x: Fraction) -> list[int]:
    """Independent expansion: ceiling recursion on exact rationals."""
    if x.denominator == 1:
        return [int(x)]
    a = math.ceil(x) - 1
    return [a] + ncf_oracle(1 / (a - x))


def eval_oracle(coefficients) -> Fraction:
    value = Fraction(coefficients[-1])
    for a in reversed(coefficients[:-1]):
        value = a - Fraction(1, 1) / value
    return value


class TestNormalize:
    def test_gcd_reduction(self):
        assert normalize_slope(2, -6) == Slope(1, -3)

    def test_infinity(self):
        assert normalize_slope(0, -5) == Slope(0, 1)

    def test_sign(self):
        assert normalize_slope(-7, 3) == Slope(7, -3)

    def test_zero_pair_rejected(self):
        with pytest.raises(SlopeError):
            normalize_slope(0, 0)

    def test_non_normalized_construction_rejected(self):
        with pytest.raises(SlopeError):
            Slope(2, 4)
        with pytest.raises(SlopeError):
            Slope(-1, 3)


class TestMobius:
    def test_first_attach_map_neighborhood_slope(self):
        # slope 1/k with k = -3 goes to k/(2k-1) = 3/7
        s = normalize_slope(-3, 1)
        assert mobius_apply(attach_map_v1(), s) == slope_from_value(Fraction(3, 7))

    def test_third_attach_map_integer_slope(self):
        assert mobius_apply(attach_map_v3(2), slope_from_value(-2)) == slope_from_value(0)

    def test_third_attach_map_infinite_image(self):
        assert mobius_apply(attach_map_v3(2), slope_from_value(Fraction(-11, 6))) == INFINITY

    def test_identity(self):
        for value in (0, -5, Fraction(3, 7)):
            s = slope_from_value(value)
            assert mobius_apply(UnimodularMatrix.identity(), s) == s
        assert mobius_apply(UnimodularMatrix.identity(), INFINITY) == INFINITY

    def test_second_attach_map(self):
        for k in range(-50, 0):
            got = mobius_apply(attach_map_v2(), normalize_slope(k, 1))
            assert got == slope_from_value(Fraction(-k, 3 * k + 1))

    def test_exterior_slope_formula(self):
        for n in range(2, 21):
            for k in range(-50, 0):
                got = mobius_apply(attach_map_v3(n), normalize_slope(k, 1))
                assert got == slope_from_value(Fraction(-(n * k + 1), (6 * n - 1) * k + 6))

    def test_attach_maps_are_positive_unimodular(self):
        assert attach_map_v1().det == 1
        assert attach_map_v2().det == 1
        assert attach_map_v3(7).det == 1
        assert fiber_monodromy().det == 1


@st.composite
def unimodular_matrices(draw):
    m = UnimodularMatrix.identity()
    shear_up = UnimodularMatrix(1, 1, 0, 1)
    shear_low = UnimodularMatrix(1, 0, 1, 1)
    flip = UnimodularMatrix(0, 1, 1, 0)
    for step in draw(st.lists(st.sampled_from([shear_up, shear_low, flip]), max_size=8)):
        m = m @ step
    return m


@st.composite
def arbitrary_slopes(draw):
    p = draw(st.integers(min_value=-40, max_value=40))
    q = draw(st.integers(min_value=-40, max_value=40))
    if (p, q) == (0, 0):
        q = 1
    return normalize_slope(p, q)


@given(unimodular_matrices(), arbitrary_slopes())
def test_mobius_inverse_property(m, s):
    assert mobius_apply(m.inverse(), mobius_apply(m, s)) == s


class TestNcf:
    def test_integer(self):
        assert neg_continued_fraction(-2, 1).coefficients == (-2,)

    def test_examples_against_oracle(self):
        for p, q in ((-5, 2), (-11, 2), (-17, 3), (-4, 3)):
            got = neg_continued_fraction(p, q).coefficients
            assert list(got) == ncf_oracle(Fraction(p, q))
            assert eval_oracle(got) == Fraction(p, q)
        assert neg_continued_fraction(-5, 2).coefficients == (-3, -2)
        assert neg_continued_fraction(-11, 2).coefficients == (-6, -2)

    def test_eval_examples(self):
        assert eval_ncf(NcfExpansion((-2,))) == slope_from_value(-2)
        assert eval_ncf(NcfExpansion((-3, -2))) == slope_from_value(Fraction(-5, 2))
        assert eval_ncf(NcfExpansion((-2, -2, -2))) == slope_from_value(Fraction(-4, 3))

    def test_domain_errors(self):
        with pytest.raises(SlopeError):
            neg_continued_fraction(5, 2)
        with pytest.raises(SlopeError):
            neg_continued_fraction(0, 1)
        with pytest.raises(SlopeError):
            neg_continued_fraction(-1, 2)  # in (-1, 0): not expressible
        with pytest.raises(SlopeError):
            neg_continued_fraction(-1, 1)  # exactly -1: not expressible
        with pytest.raises(ValueError):
            NcfExpansion(())
        with pytest.raises(ValueError):
            NcfExpansion((-2, -1))

    @given(st.integers(min_value=-500, max_value=-2), st.integers(min_value=1, max_value=200))
    def test_roundtrip_from_rationals(self, p, q):
        value = Fraction(p, q)
        if value >= -1:
            return
        e = neg_continued_fraction(value.numerator, value.denominator)
        assert eval_ncf(e) == slope_from_value(value)

    @given(st.lists(st.integers(min_value=-9, max_value=-2), min_size=1, max_size=7))
    def test_roundtrip_from_expansions(self, coefficients):
        e = NcfExpansion(tuple(coefficients))
        value = eval_ncf(e).value()
        assert neg_continued_fraction(value.numerator, value.denominator) == e


class TestTightCounts:
    def test_standard_neighborhood(self):
        assert tight_count_solid_torus(slope_from_value(-1)) == 1

    def test_integer_slopes(self):
        assert tight_count_solid_torus(slope_from_value(-3)) == 3
        for m in range(1, 31):
            assert tight_count_solid_torus(slope_from_value(-m)) == m

    def test_rational_slope_against_oracle(self):
        # |(a_0+1) ... (a_{k-1}+1) a_k| over the oracle expansion of -5/2
        coefficients = ncf_oracle(Fraction(-5, 2))
        expected = abs(coefficients[-1])
        for a in coefficients[:-1]:
            expected *= abs(a + 1)
        assert expected == 4
        assert tight_count_solid_torus(slope_from_value(Fraction(-5, 2))) == 4

    def test_domain_errors(self):
        with pytest.raises(SlopeError):
            tight_count_solid_torus(slope_from_value(0))
        with pytest.raises(SlopeError):
            tight_count_solid_torus(INFINITY)
        with pytest.raises(SlopeError):
            tight_count_solid_torus(slope_from_value(Fraction(-1, 2)))


class TestCountsAndTwisting:
    def test_upper_bound_examples(self):
        assert upper_bound_count(2) == 1
        assert upper_bound_count(5) == 10
        assert upper_bound_count(7) == 21

    def test_upper_bound_sweep(self):
        for n in range(2, 51):
            assert upper_bound_count(n) == n * (n - 1) // 2

    def test_upper_bound_domain(self):
        with pytest.raises(ValueError):
            upper_bound_count(1)

    def test_max_twisting(self):
        assert max_twisting_values(2) == [-5]
        assert max_twisting_values(3) == [-5, -11]
        assert -6 * 1 + 1 == -(6 * 1 - 1)
        with pytest.raises(ValueError):
            max_twisting_values(1)

    def test_twisting_count_matches_upper_bound_range(self):
        for n in range(2, 30):
            assert len(max_twisting_values(n)) == n - 1


class TestEdgeRounding:
    def test_pinned_pair(self):
        for n in range(2, 21):
            for k in range(1, n):
                plus, minus = edge_rounding_candidates(n, k)
                assert plus == slope_from_value(Fraction(-k, 6 * k - 1))
                assert minus == slope_from_value(Fraction(-k, 6 * k + 1))
