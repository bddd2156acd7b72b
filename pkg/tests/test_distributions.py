"""Measure parameters, marginal series, normalization, and the sampler."""

from fractions import Fraction

import pytest

from qident.distributions import (
    Family,
    MeasureParams,
    SampleResult,
    first_column_marginal,
    marginal_series,
    marginal_vs_bruteforce,
    normalization_check,
    prefactor_series,
    prob,
    sample,
    truncated_distribution,
    truncated_prefactor,
)
from qident.partitions import Partition, cl_numerator, enumerate_partitions
from qident.qseries import pochhammer_inv_q2
from qident.rational import q_power

HALF = Fraction(1, 2)
TOL = Fraction(1, 10**9)


@pytest.fixture(scope="module")
def params():
    return MeasureParams.with_tolerance(2, HALF, TOL)


def test_params_validation():
    with pytest.raises(ValueError):
        MeasureParams(Fraction(1, 2), HALF, 5, TOL)
    with pytest.raises(ValueError):
        MeasureParams(Fraction(2), Fraction(3, 2), 5, TOL)
    with pytest.raises(ValueError):
        MeasureParams(Fraction(2), HALF, 5, Fraction(0))
    with pytest.raises(ValueError):
        # cutoff too small for the requested tolerance
        MeasureParams(Fraction(2), HALF, 0, Fraction(1, 10**6))


def test_with_tolerance_picks_minimal_cutoff(params):
    assert params.tail_bound <= TOL
    smaller = MeasureParams(params.q, params.u, params.product_cutoff - 1, Fraction(1))
    assert smaller.tail_bound > TOL


def test_prob_zero_off_constraint(params):
    pv = prob(Partition((3, 1)), Family.SP, params)
    assert pv.value == 0


def test_prob_empty_partition_is_normalizer(params):
    pv = prob(Partition(()), Family.SP, params)
    assert pv.value == truncated_prefactor(Family.SP, params)
    assert 0 < pv.value < 1


def test_prob_single_box_orthogonal(params):
    # direct formula: prefactor/(1+u) * u * 1
    pv = prob(Partition((1,)), Family.O, params)
    expected = Fraction(1)
    for i in range(1, params.product_cutoff + 1):
        expected *= 1 - HALF**2 / Fraction(2) ** (2 * i - 1)
    expected = expected / (1 + HALF) * HALF
    assert pv.value == expected
    assert pv.tail_bound == params.tail_bound


def test_prob_positive_on_support(params):
    for fam in Family:
        for n in range(7):
            for p in enumerate_partitions(n, fam.constraint):
                assert prob(p, fam, params).value > 0


def test_marginal_single_partition_coefficients():
    series = marginal_series(Family.SP, "even", 1, 4)
    assert series.coefficient(2) == cl_numerator(Partition((1, 1)), +1)[0]
    series = marginal_series(Family.O, "odd", 1, 4)
    assert series.coefficient(1) == cl_numerator(Partition((1,)), -1)[0]
    for fam in Family:
        for parity in ("even", "odd"):
            assert marginal_series(fam, parity, 2, 6).coefficient(0) == 0


def test_marginal_k_zero_conventions():
    assert marginal_series(Family.SP, "even", 0, 3).coefficient(0) == 1
    with pytest.raises(ValueError):
        marginal_series(Family.SP, "odd", 0, 3)
    assert first_column_marginal(Family.O, 0, 3).coefficient(0) == 1


def test_marginals_against_enumeration():
    for fam in Family:
        report = marginal_vs_bruteforce(fam, 2, 8)
        assert report.passed, report.summary()


def test_prefactor_series_newton_matches_euler_product_form():
    series = prefactor_series(12)
    for j in range(7):
        euler = q_power(-j * j) / pochhammer_inv_q2(j)
        if j % 2:
            euler = -euler
        assert series.coefficient(2 * j) == euler
    for j in range(0, 12, 2):
        assert series.coefficient(j + 1) == 0  # odd powers vanish


def test_normalization_exact_through_order_eight():
    for fam in Family:
        report = normalization_check(fam, 8)
        assert report.passed, report.summary()


def test_truncated_mass_monotone_and_bounded(params):
    for fam in Family:
        masses = []
        for max_size in range(0, 7):
            dist = truncated_distribution(fam, params, max_size)
            pf = truncated_prefactor(fam, params)
            raw = pf * sum(
                params.u ** p.size * cl_numerator(p, fam.sign)[0].evaluate(params.q)
                for p, _ in dist
            )
            masses.append(raw)
        assert all(a <= b for a, b in zip(masses, masses[1:]))
        assert masses[0] < masses[-1]
        assert masses[-1] <= 1 + params.tail_bound


def test_truncated_distribution_sums_to_one(params):
    dist = truncated_distribution(Family.SP, params, 6)
    assert sum(w for _, w in dist) == 1
    assert all(w > 0 for _, w in dist)


def test_sample_empty_and_deterministic(params):
    assert sample(Family.SP, params, 6, 0, 42).partitions == ()
    a = sample(Family.SP, params, 6, 50, 42)
    b = sample(Family.SP, params, 6, 50, 42)
    assert isinstance(a, SampleResult)
    assert a.partitions == b.partitions
    assert a.to_json_dict() == b.to_json_dict()
    c = sample(Family.SP, params, 6, 50, 43)
    assert a.partitions != c.partitions  # different seed, different stream


def test_sample_mass_accounting(params):
    res = sample(Family.O, params, 5, 10, 1)
    assert 0 <= res.truncated_mass_bound < Fraction(1, 10)
    assert res.support_probability + res.truncated_mass_bound >= 1 - params.tail_bound
    for p in res.partitions:
        assert p.size <= 5
        assert Family.O.constraint.admits(p)
