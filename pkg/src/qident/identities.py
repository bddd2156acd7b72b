"""The three target q-polynomial identities and their derivation chain.

Every check compares two independently computed elements of Q(q):

* the enumeration side sums explicit weights over constrained partitions
  (``lhs_*``),
* the term side rebuilds the same quantity from first-column classes via
  the coefficient-extraction closed form (``term_*`` / ``sum_*``),
* the closed side evaluates the displayed alternating sums (``rhs_*``,
  ``sum_*_closed``) and their hypergeometric rewrites.

No check ever compares a formula against itself; that separation is the
entire point of the package.

Identity ids: ANZ1/ANZ2/ANZ3 are the three target identities (even size
with odd parts of even multiplicity; odd and even size with even parts of
even multiplicity).  EQ4/EQ5 are the reduced forms the term sums must
satisfy, and the remaining ids cover the termwise splits, the closed-form
sums, and the final recombination.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import ParityConstraint, enumerate_partitions, summand_weight
from .qseries import (
    DEFAULT_SEED,
    coeff_u_lemma,
    limit_two_phi_one,
    pochhammer,
    pochhammer_inv_q2,
    random_hypergeometric_reports,
    reciprocal_pochhammer_series,
)
from .rational import RationalFunction, q, q_power, rf_sum
from .report import VerificationReport

IDENTITY_IDS = (
    "ANZ1",
    "ANZ2",
    "ANZ3",
    "EQ4",
    "EQ5",
    "A2_SUM",
    "B2_SUM",
    "C2_SUM",
    "C1_SUM",
    "AB_SPLIT",
    "D_EQ_B2",
    "FINAL_COMBINE",
)


def _alt_sign(i: int) -> int:
    """(-1)^(i-1), valid for i = 0 as well."""
    return 1 if i % 2 else -1


def _require_range(k: int, lo: int, hi: int) -> None:
    if not lo <= k <= hi:
        raise ValueError(f"index k={k} outside [{lo}, {hi}]")


# ---------------------------------------------------------------------------
# Enumeration sides
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def lhs_anz1(m: int) -> RationalFunction:
    """Sum of sign +1 weights over partitions of 2m whose odd parts all
    occur with even multiplicity."""
    parts = enumerate_partitions(2 * m, ParityConstraint.ODD_PARTS_EVEN_MULTIPLICITY)
    return rf_sum(summand_weight(p, +1) for p in parts)


@lru_cache(maxsize=None)
def lhs_anz2(m: int) -> RationalFunction:
    """Sum of sign -1 weights over partitions of 2m+1 whose even parts all
    occur with even multiplicity."""
    parts = enumerate_partitions(
        2 * m + 1, ParityConstraint.EVEN_PARTS_EVEN_MULTIPLICITY
    )
    return rf_sum(summand_weight(p, -1) for p in parts)


@lru_cache(maxsize=None)
def lhs_anz3(m: int) -> RationalFunction:
    """Sum of sign -1 weights over partitions of 2m whose even parts all
    occur with even multiplicity."""
    parts = enumerate_partitions(2 * m, ParityConstraint.EVEN_PARTS_EVEN_MULTIPLICITY)
    return rf_sum(summand_weight(p, -1) for p in parts)


# ---------------------------------------------------------------------------
# Closed-form right sides
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def rhs_anz1(m: int) -> RationalFunction:
    """1/(q^m (q+1)) * sum_{i=1}^{m} (-1)^{i-1} (q^{2i+1}+1)
    / (q^{i(i+1)} (1/q^2;1/q^2)_{m-i}); empty sum for m = 0."""
    body = rf_sum(
        _alt_sign(i)
        * (q_power(2 * i + 1) + 1)
        * q_power(-i * (i + 1))
        / pochhammer_inv_q2(m - i)
        for i in range(1, m + 1)
    )
    return q_power(-m) * body / (q + 1)


@lru_cache(maxsize=None)
def rhs_anz2(m: int) -> RationalFunction:
    """1/(q^m (1/q^2;1/q^2)_m) + 1/q^{m+1} * sum_{i=0}^{m} (-1)^{i-1}
    / (q^{i(i+1)} (1/q^2;1/q^2)_{m-i})."""
    body = rf_sum(
        _alt_sign(i) * q_power(-i * (i + 1)) / pochhammer_inv_q2(m - i)
        for i in range(m + 1)
    )
    return q_power(-m) / pochhammer_inv_q2(m) + q_power(-(m + 1)) * body


@lru_cache(maxsize=None)
def rhs_anz3(m: int) -> RationalFunction:
    """1/q^m * sum_{i=1}^{m} (-1)^{i-1} / (q^{i(i-1)} (1/q^2;1/q^2)_{m-i})."""
    body = rf_sum(
        _alt_sign(i) * q_power(-i * (i - 1)) / pochhammer_inv_q2(m - i)
        for i in range(1, m + 1)
    )
    return q_power(-m) * body


# ---------------------------------------------------------------------------
# First-column class terms (coefficient-extraction route)
# ---------------------------------------------------------------------------

def term_a(k: int, m: int) -> RationalFunction:
    """Even first-column class 2k of the sign +1 sum, after absorbing the
    (1 - q^{-2k}) head into the Pochhammer."""
    _require_range(k, 1, m)
    return q_power(-(2 * k * k + k)) / pochhammer_inv_q2(k - 1) * coeff_u_lemma(k, m)


def term_b(k: int, m: int) -> RationalFunction:
    """Odd first-column class 2k-1 of the sign +1 sum, with its explicit
    (1 - q^{1-2k}) head."""
    _require_range(k, 1, m)
    return (
        (1 - q_power(1 - 2 * k))
        * q_power(-(2 * k * k - k))
        / pochhammer_inv_q2(k - 1)
        * coeff_u_lemma(k, m)
    )


def term_a2(k: int, m: int) -> RationalFunction:
    """First piece of the regrouped split of term_a + term_b."""
    _require_range(k, 1, m)
    return (
        (1 - q)
        * q_power(-(2 * k * k + k))
        / pochhammer_inv_q2(k - 1)
        * coeff_u_lemma(k, m)
    )


def term_b2(k: int, m: int) -> RationalFunction:
    """Second piece of the regrouped split of term_a + term_b."""
    _require_range(k, 1, m)
    return q_power(-(2 * k * k - k)) / pochhammer_inv_q2(k - 1) * coeff_u_lemma(k, m)


def term_c1(k: int, m: int) -> RationalFunction:
    """Head-free part of the odd first-column class term of the odd-size
    sign -1 sum (index runs to k = m+1)."""
    _require_range(k, 1, m + 1)
    return (
        q_power(-(2 * k * k - 3 * k + 1))
        / pochhammer_inv_q2(k - 1)
        * coeff_u_lemma(k, m + 1)
    )


def term_c2(k: int, m: int) -> RationalFunction:
    """Correction part of the split: -q^{1-2k} * term_c1."""
    return -q_power(1 - 2 * k) * term_c1(k, m)


def term_c(k: int, m: int) -> RationalFunction:
    """Odd first-column class term of the odd-size sign -1 sum, with its
    (1 - q^{1-2k}) head; equals term_c1 + term_c2 by construction."""
    return (1 - q_power(1 - 2 * k)) * term_c1(k, m)


def term_d(k: int, m: int) -> RationalFunction:
    """Even first-column class term of the even-size sign -1 sum.

    The coefficient of u^{m-k} is extracted from the truncated series of
    1/(u/q; 1/q^2)_k rather than from the closed form, so the comparison
    against term_b2 genuinely crosses two computation routes.
    """
    _require_range(k, 1, m)
    series = reciprocal_pochhammer_series(q_power(-1), q_power(-2), k, m - k)
    return (
        q_power(-(2 * k * k - k))
        / pochhammer_inv_q2(k - 1)
        * series.coefficient(m - k)
    )


def sum_ab(m: int) -> RationalFunction:
    return rf_sum(term_a(k, m) + term_b(k, m) for k in range(1, m + 1))


def sum_c(m: int) -> RationalFunction:
    return rf_sum(term_c(k, m) for k in range(1, m + 2))


def sum_d(m: int) -> RationalFunction:
    return rf_sum(term_d(k, m) for k in range(1, m + 1))


# ---------------------------------------------------------------------------
# Closed forms and hypergeometric rewrites of the term sums
# ---------------------------------------------------------------------------

def sum_a2_closed(m: int) -> RationalFunction:
    """1/(q^m (1+q)) * sum_{i=1}^{m} (-1)^{i-1} q^{-i(i+1)} (1 - q^{2i})
    / (1/q^2;1/q^2)_{m-i}."""
    body = rf_sum(
        _alt_sign(i)
        * q_power(-i * (i + 1))
        * (1 - q_power(2 * i))
        / pochhammer_inv_q2(m - i)
        for i in range(1, m + 1)
    )
    return q_power(-m) * body / (1 + q)


def sum_b2_closed(m: int) -> RationalFunction:
    """q^{-m} * sum_{i=1}^{m} (-1)^{i-1} q^{-i(i+1)} q^{2i}
    / (1/q^2;1/q^2)_{m-i}."""
    body = rf_sum(
        _alt_sign(i)
        * q_power(-i * (i + 1))
        * q_power(2 * i)
        / pochhammer_inv_q2(m - i)
        for i in range(1, m + 1)
    )
    return q_power(-m) * body


def sum_c2_closed(m: int) -> RationalFunction:
    """q^{-m-1} * sum_{i=0}^{m} (-1)^{i-1} q^{-i(i+1)} / (1/q^2;1/q^2)_{m-i}."""
    body = rf_sum(
        _alt_sign(i) * q_power(-i * (i + 1)) / pochhammer_inv_q2(m - i)
        for i in range(m + 1)
    )
    return q_power(-(m + 1)) * body


def sum_c1_closed(m: int) -> RationalFunction:
    """1/(q^m (1/q^2;1/q^2)_m)."""
    return q_power(-m) / pochhammer_inv_q2(m)


def hyper_sum_a2(m: int) -> RationalFunction:
    """The a2 sum as an explicit basic hypergeometric s-sum."""
    if m < 1:
        raise ValueError("defined for m >= 1")
    body = rf_sum(
        (1 if s % 2 == 0 else -1)
        * pochhammer(q_power(2 * m - 2), q_power(-2), s)
        / pochhammer_inv_q2(s) ** 2
        * q_power(-s * s - 3 * s - 2 * s * m - 2)
        for s in range(m)
    )
    return q_power(-m) * (1 - q) * body


def hyper_sum_b2(m: int) -> RationalFunction:
    """The b2 sum as an explicit basic hypergeometric s-sum."""
    if m < 1:
        raise ValueError("defined for m >= 1")
    body = rf_sum(
        (1 if s % 2 == 0 else -1)
        * pochhammer(q_power(2 * m - 2), q_power(-2), s)
        / pochhammer_inv_q2(s) ** 2
        * q_power(-s * s - s - 2 * s * m)
        for s in range(m)
    )
    return q_power(-m) * body


def phi_sum_a2(m: int) -> RationalFunction:
    """The a2 sum through the large-b limit of the terminating 2phi1."""
    if m < 1:
        raise ValueError("defined for m >= 1")
    phi = limit_two_phi_one(m - 1, q_power(-2), q_power(-2), q_power(-2 * m - 4))
    return q_power(-m - 2) * (1 - q) * phi


def phi_sum_b2(m: int) -> RationalFunction:
    """The b2 sum through the large-b limit of the terminating 2phi1."""
    if m < 1:
        raise ValueError("defined for m >= 1")
    phi = limit_two_phi_one(m - 1, q_power(-2), q_power(-2), q_power(-2 * m - 2))
    return q_power(-m) * phi


def hyper_sum_c1(m: int) -> RationalFunction:
    """The c1 sum as an explicit k-sum with ascending base q^2."""
    body = rf_sum(
        pochhammer(q_power(-2 * m), q_power(2), k)
        / pochhammer_inv_q2(k) ** 2
        * q_power(-2 * k * k)
        for k in range(m + 1)
    )
    return q_power(-m) * body


def phi_sum_c1(m: int) -> RationalFunction:
    """The c1 sum through the large-b limit of the terminating 2phi1."""
    phi = limit_two_phi_one(m, q_power(-2), q_power(-2), q_power(-2 * m - 2))
    return q_power(-m) * phi


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _report(identity: str, m_max: int) -> VerificationReport:
    return VerificationReport(identity, params={"m_max": m_max})


def check_anz1(m_max: int) -> VerificationReport:
    report = _report("ANZ1", m_max)
    for m in range(m_max + 1):
        report.record({"m": m}, lhs_anz1(m), rhs_anz1(m))
    return report


def check_anz2(m_max: int) -> VerificationReport:
    report = _report("ANZ2", m_max)
    for m in range(m_max + 1):
        report.record({"m": m}, lhs_anz2(m), rhs_anz2(m))
    return report


def check_anz3(m_max: int) -> VerificationReport:
    report = _report("ANZ3", m_max)
    for m in range(m_max + 1):
        report.record({"m": m}, lhs_anz3(m), rhs_anz3(m))
    return report


def check_eq4(m_max: int) -> VerificationReport:
    """The term sum for the sign +1 identity against both the closed right
    side and the enumeration left side (the bridge)."""
    report = _report("EQ4", m_max)
    for m in range(m_max + 1):
        total = sum_ab(m)
        report.record({"m": m, "route": "terms-vs-closed"}, total, rhs_anz1(m))
        report.record({"m": m, "route": "terms-vs-enumeration"}, total, lhs_anz1(m))
    return report


def check_eq5(m_max: int) -> VerificationReport:
    """The c-term sum against both the closed right side and the
    enumeration left side of the odd-size sign -1 identity."""
    report = _report("EQ5", m_max)
    for m in range(m_max + 1):
        total = sum_c(m)
        report.record({"m": m, "route": "terms-vs-closed"}, total, rhs_anz2(m))
        report.record({"m": m, "route": "terms-vs-enumeration"}, total, lhs_anz2(m))
    return report


def check_a2_sum(m_max: int) -> VerificationReport:
    report = _report("A2_SUM", m_max)
    for m in range(1, m_max + 1):
        direct = rf_sum(term_a2(k, m) for k in range(1, m + 1))
        report.record({"m": m, "route": "direct-vs-closed"}, direct, sum_a2_closed(m))
        report.record({"m": m, "route": "direct-vs-hyper"}, direct, hyper_sum_a2(m))
        report.record({"m": m, "route": "direct-vs-limit-2phi1"}, direct, phi_sum_a2(m))
    return report


def check_b2_sum(m_max: int) -> VerificationReport:
    report = _report("B2_SUM", m_max)
    for m in range(1, m_max + 1):
        direct = rf_sum(term_b2(k, m) for k in range(1, m + 1))
        report.record({"m": m, "route": "direct-vs-closed"}, direct, sum_b2_closed(m))
        report.record({"m": m, "route": "direct-vs-hyper"}, direct, hyper_sum_b2(m))
        report.record({"m": m, "route": "direct-vs-limit-2phi1"}, direct, phi_sum_b2(m))
    return report


def check_c2_sum(m_max: int) -> VerificationReport:
    """Direct c2 sum against its closed form, plus the termwise relation
    c2_k = -b2_k with m replaced by m+1."""
    report = _report("C2_SUM", m_max)
    for m in range(m_max + 1):
        direct = rf_sum(term_c2(k, m) for k in range(1, m + 2))
        report.record({"m": m, "route": "direct-vs-closed"}, direct, sum_c2_closed(m))
        for k in range(1, m + 2):
            report.record(
                {"m": m, "k": k, "route": "c2-vs-neg-b2-shift"},
                term_c2(k, m),
                -term_b2(k, m + 1),
            )
    return report


def check_c1_sum(m_max: int) -> VerificationReport:
    report = _report("C1_SUM", m_max)
    for m in range(m_max + 1):
        direct = rf_sum(term_c1(k, m) for k in range(1, m + 2))
        report.record({"m": m, "route": "direct-vs-closed"}, direct, sum_c1_closed(m))
        report.record({"m": m, "route": "direct-vs-hyper"}, direct, hyper_sum_c1(m))
        report.record({"m": m, "route": "direct-vs-limit-2phi1"}, direct, phi_sum_c1(m))
    return report


def check_splits(m_max: int) -> VerificationReport:
    """Termwise regroupings: a_k + b_k = a2_k + b2_k and c_k = c1_k + c2_k."""
    report = _report("AB_SPLIT", m_max)
    for m in range(1, m_max + 1):
        for k in range(1, m + 1):
            report.record(
                {"m": m, "k": k, "route": "ab-vs-a2b2"},
                term_a(k, m) + term_b(k, m),
                term_a2(k, m) + term_b2(k, m),
            )
    for m in range(m_max + 1):
        for k in range(1, m + 2):
            report.record(
                {"m": m, "k": k, "route": "c-vs-c1c2"},
                term_c(k, m),
                term_c1(k, m) + term_c2(k, m),
            )
    return report


def check_d(m_max: int) -> VerificationReport:
    """d_k = b2_k termwise (series extraction vs closed coefficient), and
    the d sum against both sides of the even-size sign -1 identity."""
    report = _report("D_EQ_B2", m_max)
    for m in range(1, m_max + 1):
        for k in range(1, m + 1):
            report.record(
                {"m": m, "k": k, "route": "d-vs-b2"}, term_d(k, m), term_b2(k, m)
            )
    for m in range(m_max + 1):
        total = sum_d(m)
        report.record({"m": m, "route": "terms-vs-closed"}, total, rhs_anz3(m))
        report.record({"m": m, "route": "terms-vs-enumeration"}, total, lhs_anz3(m))
    return report


def check_final_combine(m_max: int) -> VerificationReport:
    """The recombination that finishes the sign +1 identity:
    (1-q^{2i})/(1+q) + q^{2i} = (q^{2i+1}+1)/(1+q) per index, and
    sum_a2_closed + sum_b2_closed = rhs_anz1 per m."""
    report = _report("FINAL_COMBINE", m_max)
    for i in range(1, m_max + 1):
        report.record(
            {"i": i, "route": "per-index"},
            (1 - q_power(2 * i)) / (1 + q) + q_power(2 * i),
            (q_power(2 * i + 1) + 1) / (1 + q),
        )
    for m in range(1, m_max + 1):
        report.record(
            {"m": m, "route": "closed-sums-vs-rhs"},
            sum_a2_closed(m) + sum_b2_closed(m),
            rhs_anz1(m),
        )
    return report


_CHECKS = (
    check_anz1,
    check_anz2,
    check_anz3,
    check_eq4,
    check_eq5,
    check_a2_sum,
    check_b2_sum,
    check_c2_sum,
    check_c1_sum,
    check_splits,
    check_d,
    check_final_combine,
)


def verify_all(
    m_max: int = 10,
    seed: int = DEFAULT_SEED,
    qseries_n_max: int = 8,
    tuples_per_n: int = 20,
) -> list[VerificationReport]:
    """Run every identity check for m up to m_max plus the randomized
    hypergeometric sweeps; returns the reports in a stable order."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    reports = [check(m_max) for check in _CHECKS]
    reports.extend(
        random_hypergeometric_reports(
            n_max=qseries_n_max, tuples_per_n=tuples_per_n, seed=seed
        )
    )
    return reports
