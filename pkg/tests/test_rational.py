"""Field arithmetic: canonical forms, hand-computed values, algebra laws."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qident.rational import (
    PoleError,
    Polynomial,
    RationalFunction,
    poly_gcd,
    q,
    q_power,
    rf_sum,
)


def test_addition_common_denominator():
    assert q / (q + 1) + 1 / (q + 1) == 1


def test_addition_identity_element():
    x = (q**2 + 3) / (q - 1)
    assert x + RationalFunction.zero() == x


def test_addition_hand_value():
    # 1/q + 1/q^2 = (q+1)/q^2, cross-checked at q = 2
    s = q_power(-1) + q_power(-2)
    assert s == RationalFunction(Polynomial([1, 1]), Polynomial.monomial(2))
    assert s.evaluate(2) == Fraction(3, 4)


def test_power_monomials():
    assert q_power(0) == 1
    assert q_power(-3) == 1 / q**3
    assert ((q + 1) / q) ** 2 == RationalFunction(
        Polynomial([1, 2, 1]), Polynomial.monomial(2)
    )


def test_power_negative_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        RationalFunction.zero() ** -1


def test_evaluate():
    assert q_power(-1).evaluate(2) == Fraction(1, 2)
    f = RationalFunction(Polynomial([1, -1, 1]), Polynomial.monomial(3))
    assert f.evaluate(2) == Fraction(3, 8)


def test_evaluate_pole():
    f = 1 / (q - 2)
    with pytest.raises(PoleError):
        f.evaluate(2)


def test_equality_after_cancellation():
    f = RationalFunction(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))  # (q^2-1)/(q-1)
    assert f == q + 1
    assert q_power(-1) != q_power(-2)


def test_canonical_form_is_idempotent():
    # renormalizing an already-normalized value changes nothing
    f = RationalFunction(Polynomial([2, 4]), Polynomial([0, 2, 2]))
    g = RationalFunction(f.num, f.den)
    assert f.num.coeffs == g.num.coeffs and f.den.coeffs == g.den.coeffs
    assert f.den.leading == 1


def test_denominator_always_monic():
    f = RationalFunction(Polynomial([1]), Polynomial([0, 3]))  # 1/(3q)
    assert f.den == Polynomial([0, 1])
    assert f.num == Polynomial([Fraction(1, 3)])


def test_serialization_matches_canonical_layout():
    f = RationalFunction(Polynomial([1, -1, 1]), Polynomial.monomial(3))
    assert f.as_dict() == {"num": [1, -1, 1], "den": [0, 0, 0, 1]}
    assert RationalFunction.zero().as_dict() == {"num": [], "den": [1]}
    third = RationalFunction(Polynomial([Fraction(1, 3)]))
    assert third.as_dict() == {"num": ["1/3"], "den": [1]}


def test_poly_gcd_examples():
    assert poly_gcd(Polynomial([-1, 0, 1]), Polynomial([-1, 1])) == Polynomial([-1, 1])
    assert poly_gcd(Polynomial.zero(), Polynomial([0, 2])) == Polynomial([0, 1])
    a = Polynomial([1, 2, 1]) * Polynomial([3, 1])
    b = Polynomial([1, 1]) * Polynomial([5])
    assert poly_gcd(a, b) == Polynomial([1, 1])


def test_rf_sum_matches_binary_addition():
    terms = [q_power(-t) for t in range(6)] + [1 / (q + 1), (q - 1) / (q**2 + 1)]
    acc = RationalFunction.zero()
    for t in terms:
        acc = acc + t
    assert rf_sum(terms) == acc
    assert rf_sum([]) == 0


def test_divmod_roundtrip():
    a = Polynomial([3, 0, 1, 2])
    b = Polynomial([1, 1])
    quot, rem = divmod(a, b)
    assert quot * b + rem == a
    assert rem.degree < b.degree


# --- algebra laws on randomly generated small elements ---------------------

small_polys = st.lists(
    st.integers(min_value=-3, max_value=3), min_size=0, max_size=4
).map(Polynomial)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)
rationals = st.builds(RationalFunction, small_polys, nonzero_polys)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_additive_and_multiplicative_inverses(a):
    assert a + (-a) == 0
    if not a.is_zero:
        assert a * a.reciprocal() == 1
        assert a / a == 1


@given(rationals, rationals, st.integers(min_value=-3, max_value=3))
def test_evaluation_is_a_homomorphism(a, b, point):
    try:
        va, vb = a.evaluate(point), b.evaluate(point)
    except PoleError:
        return
    assert (a + b).evaluate(point) == va + vb
    assert (a - b).evaluate(point) == va - vb
    assert (a * b).evaluate(point) == va * vb
    if vb != 0 and not b.is_zero:
        assert (a / b).evaluate(point) == va / vb


@given(rationals)
def test_hash_consistent_with_equality(a):
    b = RationalFunction(a.num, a.den)
    assert a == b and hash(a) == hash(b)
