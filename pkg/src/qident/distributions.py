"""Symplectic- and orthogonal-type measures on integer partitions.

Each family weights a partition by u^size times the exact rational-function
factor from partitions.cl_numerator, normalized by the infinite product
prod_{i>=1} (1 - u^2/q^{2i-1}) (divided by 1+u for the orthogonal family).

The infinite product is handled two ways:

* for identity checks it is expanded exactly as a truncated series in u,
  via power sums and Newton's identities (only finitely many coefficients
  are needed, and each is a closed rational function of q);
* for numeric probabilities it is truncated to ``product_cutoff`` factors,
  with a certified multiplicative tail bound from the geometric series.

The sampler draws from the renormalized restriction of the measure to
partitions of bounded size; the normalizing product cancels there, so the
draw weights are exact rationals.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .partitions import ParityConstraint, Partition, cl_numerator, enumerate_partitions
from .qseries import TruncatedSeries, pochhammer_inv_q2, reciprocal_pochhammer_series
from .rational import RationalFunction, q_power
from .report import VerificationReport


class Family(Enum):
    """The two measure families and their partition constraints."""

    SP = "sp"
    O = "o"

    @property
    def constraint(self) -> ParityConstraint:
        if self is Family.SP:
            return ParityConstraint.ODD_PARTS_EVEN_MULTIPLICITY
        return ParityConstraint.EVEN_PARTS_EVEN_MULTIPLICITY

    @property
    def sign(self) -> int:
        return +1 if self is Family.SP else -1


@dataclass(frozen=True)
class MeasureParams:
    """Numeric evaluation parameters: the point (q, u) and the cutoff I of
    the normalizing product, with its certified relative tail bound."""

    q: Fraction
    u: Fraction
    product_cutoff: int
    tail_tolerance: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "tail_tolerance", Fraction(self.tail_tolerance))
        if self.q <= 1:
            raise ValueError("q must exceed 1")
        if not 0 < self.u < 1:
            raise ValueError("u must lie strictly between 0 and 1")
        if self.product_cutoff < 0:
            raise ValueError("product cutoff must be nonnegative")
        if self.tail_tolerance <= 0:
            raise ValueError("tail tolerance must be positive")
        if self.tail_bound > self.tail_tolerance:
            raise ValueError(
                f"cutoff {self.product_cutoff} leaves tail bound "
                f"{self.tail_bound} > tolerance {self.tail_tolerance}"
            )

    @property
    def tail_bound(self) -> Fraction:
        """Upper bound on sum_{i > cutoff} u^2 / q^{2i-1}; the truncated
        product exceeds the infinite one by at most this relative amount."""
        return self.u**2 * self.q ** (1 - 2 * self.product_cutoff) / (self.q**2 - 1)

    @classmethod
    def with_tolerance(cls, q, u, tolerance) -> "MeasureParams":
        """Choose the smallest cutoff whose tail bound meets the tolerance."""
        q, u, tolerance = Fraction(q), Fraction(u), Fraction(tolerance)
        if q <= 1 or not 0 < u < 1 or tolerance <= 0:
            raise ValueError("need q > 1, 0 < u < 1 and a positive tolerance")
        cutoff = 0
        while u**2 * q ** (1 - 2 * cutoff) / (q**2 - 1) > tolerance:
            cutoff += 1
        return cls(q, u, cutoff, tolerance)


def truncated_prefactor(family: Family, params: MeasureParams) -> Fraction:
    """prod_{i=1}^{cutoff} (1 - u^2/q^{2i-1}), divided by 1+u for O."""
    value = Fraction(1)
    for i in range(1, params.product_cutoff + 1):
        value *= 1 - params.u**2 / params.q ** (2 * i - 1)
    if family is Family.O:
        value /= 1 + params.u
    return value


@dataclass(frozen=True)
class ProbValue:
    """An exact probability computed with the truncated normalizer.

    The true probability lies in [value * (1 - tail_bound), value].
    """

    value: Fraction
    tail_bound: Fraction


def prob(partition: Partition, family: Family, params: MeasureParams) -> ProbValue:
    """Measure of one partition, exactly 0 if the constraint fails."""
    if not family.constraint.admits(partition):
        return ProbValue(Fraction(0), Fraction(0))
    coeff, upower = cl_numerator(partition, family.sign)
    value = (
        truncated_prefactor(family, params)
        * params.u**upower
        * coeff.evaluate(params.q)
    )
    return ProbValue(value, params.tail_bound)


# ---------------------------------------------------------------------------
# Exact series identities: first-column marginals and normalization
# ---------------------------------------------------------------------------

def marginal_series(family: Family, parity: str, k: int, order: int) -> TruncatedSeries:
    """Core series in u of the first-column class (without the shared
    normalizing prefactor, and without 1/(1+u) for O):

        SP, column 2k:    u^{2k} / (q^{2k^2+k} (1/q^2;1/q^2)_k   (u^2/q;1/q^2)_k)
        SP, column 2k-1:  u^{2k} / (q^{2k^2-k} (1/q^2;1/q^2)_{k-1}(u^2/q;1/q^2)_k)
        O,  column 2k-1:  u^{2k-1}/(q^{2k^2-3k+1}(1/q^2;1/q^2)_{k-1}(u^2/q;1/q^2)_k)
        O,  column 2k:    u^{2k} / (q^{2k^2-k} (1/q^2;1/q^2)_k   (u^2/q;1/q^2)_k)

    k = 0 with even parity is the empty-partition class, the constant 1.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if k == 0:
        if parity == "odd":
            raise ValueError("the odd-column index starts at k = 1")
        return TruncatedSeries.constant(1, order)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if family is Family.SP:
        if parity == "even":
            lead, expo, poch_len = 2 * k, 2 * k * k + k, k
        else:
            lead, expo, poch_len = 2 * k, 2 * k * k - k, k - 1
    else:
        if parity == "odd":
            lead, expo, poch_len = 2 * k - 1, 2 * k * k - 3 * k + 1, k - 1
        else:
            lead, expo, poch_len = 2 * k, 2 * k * k - k, k
    head = q_power(-expo) / pochhammer_inv_q2(poch_len)
    tail = reciprocal_pochhammer_series(
        q_power(-1), q_power(-2), k, order, step=2
    )
    return TruncatedSeries.monomial(lead, order, head) * tail


def first_column_marginal(family: Family, column: int, order: int) -> TruncatedSeries:
    """Marginal core series for a literal first-column value."""
    if column < 0:
        raise ValueError("column must be nonnegative")
    if column % 2 == 0:
        return marginal_series(family, "even", column // 2, order)
    return marginal_series(family, "odd", (column + 1) // 2, order)


def marginal_vs_bruteforce(family: Family, k_max: int, order: int) -> VerificationReport:
    """Compare every marginal coefficient of u^j (j <= order) for first
    columns up to 2*k_max against direct enumeration of the partitions in
    that class."""
    report = VerificationReport(
        f"marginals-{family.value}", params={"k_max": k_max, "order": order}
    )
    by_size = {
        j: enumerate_partitions(j, family.constraint) for j in range(order + 1)
    }
    for column in range(2 * k_max + 1):
        series = first_column_marginal(family, column, order)
        for j in range(order + 1):
            brute = RationalFunction.zero()
            for p in by_size[j]:
                if p.num_parts == column:
                    brute = brute + cl_numerator(p, family.sign)[0]
            report.record(
                {"column": column, "u_power": j}, series.coefficient(j), brute
            )
    return report


def prefactor_series(order: int) -> TruncatedSeries:
    """Exact expansion of prod_{i>=1} (1 - u^2/q^{2i-1}) through u^order.

    The coefficient of u^{2j} is (-1)^j e_j, where the elementary symmetric
    functions e_j of the variables u^2/q^{2i-1} follow from their power
    sums p_t = q^t/(q^{2t}-1) by Newton's identities.  Each coefficient is
    a closed rational function of q, so the truncation is exact even though
    every factor of the product contributes at order u^2.
    """
    elementary = [RationalFunction.one()]
    power_sums = {
        t: q_power(t) / (q_power(2 * t) - 1) for t in range(1, order // 2 + 1)
    }
    for j in range(1, order // 2 + 1):
        acc = RationalFunction.zero()
        for t in range(1, j + 1):
            term = elementary[j - t] * power_sums[t]
            acc = acc + (term if t % 2 else -term)
        elementary.append(acc / j)
    coeffs = [RationalFunction.zero()] * (order + 1)
    for j in range(order // 2 + 1):
        coeffs[2 * j] = elementary[j] if j % 2 == 0 else -elementary[j]
    return TruncatedSeries(order, tuple(coeffs))


def normalization_check(family: Family, order: int) -> VerificationReport:
    """Verify, coefficient by coefficient through u^order, that the sum of
    all first-column marginal cores times the family prefactor equals 1."""
    report = VerificationReport(
        f"normalization-{family.value}", params={"order": order}
    )
    total = TruncatedSeries.constant(1, order)  # empty-partition class
    for k in range(1, order + 1):
        even_lead = 2 * k
        odd_lead = 2 * k if family is Family.SP else 2 * k - 1
        if even_lead > order and odd_lead > order:
            break
        if even_lead <= order:
            total = total + marginal_series(family, "even", k, order)
        if odd_lead <= order:
            total = total + marginal_series(family, "odd", k, order)
    prefactor = prefactor_series(order)
    if family is Family.O:
        one_plus_u = TruncatedSeries.constant(1, order) + TruncatedSeries.monomial(
            1, order
        )
        prefactor = prefactor * one_plus_u.reciprocal()
    product = total * prefactor
    one = RationalFunction.one()
    zero = RationalFunction.zero()
    for j in range(order + 1):
        report.record(
            {"u_power": j}, product.coefficient(j), one if j == 0 else zero
        )
    return report


# ---------------------------------------------------------------------------
# Truncated-support sampling
# ---------------------------------------------------------------------------

def _support_weights(
    family: Family, params: MeasureParams, max_size: int
) -> tuple[list[Partition], list[Fraction]]:
    """Unnormalized weights u^size * coefficient(q) over the truncated
    support, in enumeration order with sizes ascending."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    support: list[Partition] = []
    weights: list[Fraction] = []
    for n in range(max_size + 1):
        for p in enumerate_partitions(n, family.constraint):
            coeff, upower = cl_numerator(p, family.sign)
            support.append(p)
            weights.append(params.u**upower * coeff.evaluate(params.q))
    return support, weights


def truncated_distribution(
    family: Family, params: MeasureParams, max_size: int
) -> list[tuple[Partition, Fraction]]:
    """The measure renormalized to partitions of size <= max_size, as exact
    rationals (the normalizing product cancels in the renormalization)."""
    support, weights = _support_weights(family, params, max_size)
    total = sum(weights)
    if total <= 0:
        raise ValueError("truncated support has no mass")
    return [(p, w / total) for p, w in zip(support, weights)]


@dataclass(frozen=True)
class SampleResult:
    """Draws from the truncated measure plus the truncation accounting."""

    family: Family
    params: MeasureParams
    max_size: int
    seed: int
    partitions: tuple[Partition, ...]
    support_probability: Fraction
    truncated_mass_bound: Fraction

    def to_json_dict(self) -> dict:
        return {
            "samples": [p.to_json() for p in self.partitions],
            "metadata": {
                "family": self.family.value,
                "params": {
                    "q": str(self.params.q),
                    "u": str(self.params.u),
                    "product_cutoff": self.params.product_cutoff,
                    "tail_tolerance": str(self.params.tail_tolerance),
                },
                "max_size": self.max_size,
                "seed": self.seed,
                "support_probability": str(self.support_probability),
                "truncated_mass_bound": str(self.truncated_mass_bound),
            },
        }


def sample(
    family: Family,
    params: MeasureParams,
    max_size: int,
    count: int,
    seed: int,
) -> SampleResult:
    """Inverse-CDF draws over the enumerated truncated support.

    Deterministic for a fixed seed.  ``truncated_mass_bound`` is a rigorous
    upper bound on the true measure of partitions outside the support,
    combining the enumerated mass with the prefactor tail bound.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    support, weights = _support_weights(family, params, max_size)
    total = sum(weights)
    if total <= 0:
        raise ValueError("truncated support has no mass")
    raw_mass = truncated_prefactor(family, params) * total
    bound = 1 - (1 - params.tail_bound) * raw_mass
    if bound < 0:
        bound = Fraction(0)

    cdf: list[Fraction] = []
    acc = Fraction(0)
    for w in weights:
        acc += w
        cdf.append(acc / total)
    rng = random.Random(seed)
    draws = []
    for _ in range(count):
        r = Fraction(rng.random())
        idx = bisect_right(cdf, r)
        if idx >= len(support):  # guard against r == 1 edge
            idx = len(support) - 1
        draws.append(support[idx])
    return SampleResult(
        family=family,
        params=params,
        max_size=max_size,
        seed=seed,
        partitions=tuple(draws),
        support_probability=raw_mass,
        truncated_mass_bound=bound,
    )
