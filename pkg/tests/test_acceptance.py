"""Acceptance suite: one test per criterion, each printing a verdict line.

Every tolerance here is zero -- all comparisons are equalities of canonical
rational functions or exact Fractions -- except criterion 12, whose stated
tolerance is five binomial standard deviations on 10^4 seeded draws.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction

from qident import distributions, identities as idn
from qident.distributions import Family, MeasureParams
from qident.partitions import enumerate_partitions
from qident.qseries import (
    coeff_u_lemma,
    random_hypergeometric_reports,
    reciprocal_pochhammer_series,
)
from qident.rational import q_power, rf_sum

EVAL_POINTS = (2, 3, 5)


@contextmanager
def criterion(number: int, description: str):
    try:
        yield
    except BaseException:
        print(f"CRITERION {number:2d}: FAIL - {description}")
        raise
    print(f"CRITERION {number:2d}: PASS - {description}")


def test_criterion_01_first_identity_exact_to_ten():
    with criterion(1, "enumeration equals closed form, sign +1 family, m <= 10"):
        start = time.monotonic()
        for m in range(11):
            assert idn.lhs_anz1(m) == idn.rhs_anz1(m), f"m={m}"
        elapsed = time.monotonic() - start
        assert elapsed < 60, f"took {elapsed:.1f}s, budget is one minute"


def test_criterion_02_second_identity_exact_to_ten():
    with criterion(2, "enumeration equals closed form, odd-size sign -1, m <= 10"):
        assert idn.lhs_anz2(0) == 1 - q_power(-1)  # spot value
        for m in range(11):
            assert idn.lhs_anz2(m) == idn.rhs_anz2(m), f"m={m}"


def test_criterion_03_third_identity_exact_to_ten():
    with criterion(3, "enumeration equals closed form, even-size sign -1, m <= 10"):
        assert idn.lhs_anz3(1) == q_power(-1) == idn.rhs_anz3(1)  # spot value
        for m in range(11):
            assert idn.lhs_anz3(m) == idn.rhs_anz3(m), f"m={m}"


def test_criterion_04_bridges_terms_vs_enumeration():
    with criterion(4, "column-class term sums equal enumeration sums, m <= 8"):
        for m in range(9):
            assert idn.sum_ab(m) == idn.lhs_anz1(m), f"ab bridge m={m}"
            assert idn.sum_c(m) == idn.lhs_anz2(m), f"c bridge m={m}"
            assert idn.sum_d(m) == idn.lhs_anz3(m), f"d bridge m={m}"


def test_criterion_05_termwise_splits():
    with criterion(5, "termwise regroupings hold for every k, m <= 8"):
        for m in range(1, 9):
            for k in range(1, m + 1):
                assert idn.term_a(k, m) + idn.term_b(k, m) == idn.term_a2(
                    k, m
                ) + idn.term_b2(k, m)
                assert idn.term_d(k, m) == idn.term_b2(k, m)
        for m in range(9):
            for k in range(1, m + 2):
                assert idn.term_c(k, m) == idn.term_c1(k, m) + idn.term_c2(k, m)
                assert idn.term_c2(k, m) == -idn.term_b2(k, m + 1)


def test_criterion_06_closed_form_sums():
    with criterion(6, "direct term sums equal displayed closed forms, m <= 8"):
        for m in range(1, 9):
            assert rf_sum(
                idn.term_a2(k, m) for k in range(1, m + 1)
            ) == idn.sum_a2_closed(m), f"a2 m={m}"
            assert rf_sum(
                idn.term_b2(k, m) for k in range(1, m + 1)
            ) == idn.sum_b2_closed(m), f"b2 m={m}"
        for m in range(9):
            assert rf_sum(
                idn.term_c1(k, m) for k in range(1, m + 2)
            ) == idn.sum_c1_closed(m), f"c1 m={m}"
            assert rf_sum(
                idn.term_c2(k, m) for k in range(1, m + 2)
            ) == idn.sum_c2_closed(m), f"c2 m={m}"


def test_criterion_07_randomized_hypergeometric_sweeps():
    with criterion(7, "2phi1 evaluation/transformation on seeded random tuples"):
        reports = random_hypergeometric_reports(n_max=8, tuples_per_n=20)
        assert len(reports) == 3
        for report in reports:
            assert report.passed, report.summary()
            assert report.n_checked == 9 * 20  # 20 valid tuples per n, n <= 8
            draws = report.n_checked + report.n_skipped
            assert report.n_skipped < 0.2 * draws, (
                f"{report.identity}: {report.n_skipped} skips of {draws} draws"
            )


def test_criterion_08_coefficient_lemma_vs_series():
    with criterion(8, "coefficient lemma equals series expansion, k <= 6, m <= 12"):
        for k in range(7):
            for m in range(k, 13):
                series = reciprocal_pochhammer_series(
                    q_power(-1), q_power(-2), k, m - k
                )
                assert coeff_u_lemma(k, m) == series.coefficient(m - k), (k, m)


def test_criterion_09_marginals_vs_enumeration():
    with criterion(9, "first-column marginals match enumeration, columns <= 6, order 12"):
        for family in Family:
            report = distributions.marginal_vs_bruteforce(family, 3, 12)
            assert report.passed, report.summary()


def test_criterion_10_normalization_series():
    with criterion(10, "marginal sums times prefactor equal 1 through u^12"):
        for family in Family:
            report = distributions.normalization_check(family, 12)
            assert report.passed, report.summary()


def test_criterion_11_numeric_consistency():
    """Walk every comparison recorded by every symbolic check and replay it
    at q = 2, 3 and 5; rational-function equality must survive evaluation."""
    with criterion(11, "all symbolic passes re-verified numerically at q = 2, 3, 5"):
        reports = [check(8) for check in idn._CHECKS]
        for family in Family:
            reports.append(distributions.marginal_vs_bruteforce(family, 3, 8))
            reports.append(distributions.normalization_check(family, 8))
        replayed = 0
        for report in reports:
            assert report.passed, report.summary()
            for result in report.results:
                for point in EVAL_POINTS:
                    assert result.lhs_value.evaluate(point) == result.rhs_value.evaluate(
                        point
                    ), (report.identity, result.index, point)
                replayed += 1
        assert replayed > 400  # the derivation chain, marginals and normalization


def test_criterion_12_sampler_determinism_and_frequencies():
    with criterion(12, "seeded sampler reproducible and within 5 sigma on 10^4 draws"):
        params = MeasureParams.with_tolerance(2, Fraction(1, 2), Fraction(1, 10**9))
        first = distributions.sample(Family.SP, params, 6, 10_000, 42)
        second = distributions.sample(Family.SP, params, 6, 10_000, 42)
        assert first.to_json_dict() == second.to_json_dict()

        renormalized = dict(distributions.truncated_distribution(Family.SP, params, 6))
        counts: dict = {}
        for p in first.partitions:
            counts[p] = counts.get(p, 0) + 1
        checked = 0
        for size in range(5):
            for p in enumerate_partitions(size, Family.SP.constraint):
                expected = float(renormalized[p])
                sigma = math.sqrt(expected * (1 - expected) / 10_000)
                observed = counts.get(p, 0) / 10_000
                assert abs(observed - expected) <= 5 * sigma, (
                    p, observed, expected, sigma
                )
                checked += 1
        # the admissible partitions of size <= 4: sizes 0, 2 and 4 only
        assert checked == 7
