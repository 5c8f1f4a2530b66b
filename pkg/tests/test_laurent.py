from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brieskorn_tight.laurent import STEP, HalfLaurent, binomial_difference_power

polys = st.lists(
    st.tuples(st.integers(min_value=-8, max_value=8), st.integers(min_value=-6, max_value=6)),
    max_size=6,
).map(HalfLaurent)


def test_zero_coefficients_are_pruned():
    p = HalfLaurent([(0, 1), (0, -1), (3, 2)])
    assert p == HalfLaurent.monomial(2, 3)
    assert p.coefficient(0) == 0
    assert not HalfLaurent.zero()._terms  # noqa: SLF001 - representation check


def test_step_constant():
    assert STEP == HalfLaurent([(1, 1), (-1, -1)])
    assert STEP.support() == (-1, 1)


def test_exponent_views():
    p = HalfLaurent([(-3, 2), (2, 1)])
    assert p.exponents() == (Fraction(-3, 2), Fraction(1))
    assert list(p.terms()) == [(-3, 2), (2, 1)]


def test_power_and_binomial_expansion_agree():
    for i in range(8):
        assert STEP ** i == binomial_difference_power(i)
    assert (STEP ** 2) * HalfLaurent.half_power(4) == binomial_difference_power(2, 4)


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        STEP ** -1


def test_str_formatting():
    assert str(HalfLaurent.zero()) == "0"
    assert str(HalfLaurent.one()) == "1"
    assert str(STEP) == "-t^(-1/2) + t^(1/2)"
    assert str(STEP ** 2) == "t^-1 - 2 + t"
    assert str(HalfLaurent.monomial(3, 4)) == "3*t^2"
    assert str(HalfLaurent.monomial(-1, -5)) == "-t^(-5/2)"


def test_immutability():
    p = HalfLaurent.one()
    with pytest.raises(AttributeError):
        p._terms = {}


def test_pairs_roundtrip():
    p = STEP ** 3
    assert HalfLaurent.from_pairs(p.to_pairs()) == p
    assert p.to_pairs() == [[-3, -1], [-1, 3], [1, -3], [3, 1]]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + HalfLaurent.zero() == a
    assert a * HalfLaurent.one() == a
    assert a - a == HalfLaurent.zero()


@given(polys)
def test_conjugation_is_a_ring_involution(a):
    assert a.conjugate().conjugate() == a


@given(polys, polys)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(polys)
def test_hash_consistency(a):
    assert hash(a) == hash(HalfLaurent(dict(a.terms())))
