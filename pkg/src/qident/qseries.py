"""q-Pochhammer symbols, terminating 2phi1 sums, and truncated power series.

The Pochhammer convention throughout is

    (a; r)_n = (1 - a)(1 - a r) ... (1 - a r^{n-1}),    (a; r)_0 = 1,

with a and r arbitrary elements of Q(q), not just monomials.  The
terminating 2phi1 and its evaluation/transformation identities are checked
by computing both displayed sides independently in exact arithmetic.

TruncatedSeries provides formal power series in an auxiliary variable u
with rational-function coefficients, exact through a caller-chosen order.
It serves as the coefficient-extraction oracle for the closed forms used by
the identity proofs (and by the distribution marginals).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rational import RationalFunction, as_rational, q_power, rf_sum
from .report import VerificationReport

#: Seed used by all randomized parameter sweeps unless the caller overrides it.
DEFAULT_SEED = 1729


class DegenerateParameters(ValueError):
    """A parameter tuple makes a required Pochhammer denominator vanish."""


def pochhammer(a, ratio, n: int) -> RationalFunction:
    """(a; ratio)_n as an exact rational function; n = 0 gives 1."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    a = as_rational(a)
    ratio = as_rational(ratio)
    value = RationalFunction.one()
    power = RationalFunction.one()
    for _ in range(n):
        value = value * (1 - a * power)
        power = power * ratio
    return value


@lru_cache(maxsize=None)
def pochhammer_inv_q2(n: int) -> RationalFunction:
    """(1/q^2; 1/q^2)_n, the product appearing in every partition weight."""
    if n == 0:
        return RationalFunction.one()
    return pochhammer_inv_q2(n - 1) * (1 - q_power(-2 * n))


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters (n, b, c, q, z) of a terminating 2phi1.

    ``q`` here is the series base, itself an element of Q(q); the first
    upper parameter is always q^{-n}, which is what makes the sum terminate.
    """

    n: int
    b: RationalFunction
    c: RationalFunction
    q: RationalFunction
    z: RationalFunction

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("termination index must be nonnegative")
        for name in ("b", "c", "q", "z"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))


def two_phi_one(spec: HypergeometricSpec) -> RationalFunction:
    """sum_{k=0}^{n} (q^{-n};q)_k (b;q)_k / ((q;q)_k (c;q)_k) z^k."""
    if spec.n > 0 and spec.q.is_zero:
        raise DegenerateParameters("series base is zero")
    a = spec.q ** -spec.n if spec.n else RationalFunction.one()
    poch_a = poch_b = poch_q = poch_c = RationalFunction.one()
    zk = RationalFunction.one()
    rpow = RationalFunction.one()  # q^{k-1} while processing term k
    terms = [RationalFunction.one()]
    for k in range(1, spec.n + 1):
        fq = 1 - spec.q * rpow
        if fq.is_zero:
            raise DegenerateParameters(f"(q;q)_{k} vanishes")
        fc = 1 - spec.c * rpow
        if fc.is_zero:
            raise DegenerateParameters(f"(c;q)_{k} vanishes")
        poch_a = poch_a * (1 - a * rpow)
        poch_b = poch_b * (1 - spec.b * rpow)
        poch_q = poch_q * fq
        poch_c = poch_c * fc
        zk = zk * spec.z
        rpow = rpow * spec.q
        terms.append(poch_a * poch_b / (poch_q * poch_c) * zk)
    return rf_sum(terms)


def qchu_check(n: int, b, c, qbase) -> VerificationReport:
    """Evaluation of the terminating 2phi1 at argument z = c q^n / b:
    both sides of 2phi1(q^{-n}, b; c; q, c q^n / b) = (c/b;q)_n / (c;q)_n.
    """
    b, c, qbase = as_rational(b), as_rational(c), as_rational(qbase)
    report = VerificationReport(
        "qchu", params={"n": n, "b": str(b), "c": str(c), "q": str(qbase)}
    )
    index = {"n": n, "b": str(b), "c": str(c), "q": str(qbase)}
    try:
        if b.is_zero:
            raise DegenerateParameters("b = 0")
        denom = pochhammer(c, qbase, n)
        if denom.is_zero:
            raise DegenerateParameters(f"(c;q)_{n} vanishes")
        z = c * qbase ** n / b
        lhs = two_phi_one(HypergeometricSpec(n, b, c, qbase, z))
        rhs = pochhammer(c / b, qbase, n) / denom
    except DegenerateParameters as exc:
        report.record_skip(index, str(exc))
    else:
        report.record(index, lhs, rhs)
    return report


def transform_check(spec: HypergeometricSpec) -> VerificationReport:
    """Transformation of the terminating 2phi1: compares the direct sum
    against (c/b;q)_n/(c;q)_n times the transformed sum in powers of q.
    """
    report = VerificationReport(
        "transform",
        params={
            "n": spec.n,
            "b": str(spec.b),
            "c": str(spec.c),
            "q": str(spec.q),
            "z": str(spec.z),
        },
    )
    index = dict(report.params)
    try:
        lhs = two_phi_one(spec)
        if spec.b.is_zero or spec.c.is_zero:
            raise DegenerateParameters("b or c is zero")
        poch_c_n = pochhammer(spec.c, spec.q, spec.n)
        if poch_c_n.is_zero:
            raise DegenerateParameters(f"(c;q)_{spec.n} vanishes")
        prefactor = pochhammer(spec.c / spec.b, spec.q, spec.n) / poch_c_n
        a = spec.q ** -spec.n if spec.n else RationalFunction.one()
        d = spec.b * spec.z * a / spec.c
        e = spec.b * spec.q ** (1 - spec.n) / spec.c
        poch_a = poch_b = poch_d = poch_q = poch_e = RationalFunction.one()
        qk = RationalFunction.one()
        rpow = RationalFunction.one()
        terms = [RationalFunction.one()]
        for k in range(1, spec.n + 1):
            fq = 1 - spec.q * rpow
            fe = 1 - e * rpow
            if fq.is_zero:
                raise DegenerateParameters(f"(q;q)_{k} vanishes")
            if fe.is_zero:
                raise DegenerateParameters(f"(b q^(1-n)/c;q)_{k} vanishes")
            poch_a = poch_a * (1 - a * rpow)
            poch_b = poch_b * (1 - spec.b * rpow)
            poch_d = poch_d * (1 - d * rpow)
            poch_q = poch_q * fq
            poch_e = poch_e * fe
            qk = qk * spec.q
            rpow = rpow * spec.q
            terms.append(poch_a * poch_b * poch_d / (poch_q * poch_e) * qk)
        rhs = prefactor * rf_sum(terms)
    except DegenerateParameters as exc:
        report.record_skip(index, str(exc))
    else:
        report.record(index, lhs, rhs)
    return report


def limit_two_phi_one(n: int, c, qbase, z) -> RationalFunction:
    """The large-b limit of 2phi1(q^{-n}, b; c; q, z/b), by its exact terms:

        sum_{k=0}^{n} (q^{-n};q)_k (-1)^k q^{binom(k,2)} z^k
                      / ((q;q)_k (c;q)_k).
    """
    c, qbase, z = as_rational(c), as_rational(qbase), as_rational(z)
    if n > 0 and qbase.is_zero:
        raise DegenerateParameters("series base is zero")
    a = qbase ** -n if n else RationalFunction.one()
    poch_a = poch_q = poch_c = RationalFunction.one()
    zk = RationalFunction.one()
    qbinom = RationalFunction.one()  # q^{binom(k,2)}
    rpow = RationalFunction.one()
    terms = [RationalFunction.one()]
    for k in range(1, n + 1):
        fq = 1 - qbase * rpow
        if fq.is_zero:
            raise DegenerateParameters(f"(q;q)_{k} vanishes")
        fc = 1 - c * rpow
        if fc.is_zero:
            raise DegenerateParameters(f"(c;q)_{k} vanishes")
        poch_a = poch_a * (1 - a * rpow)
        poch_q = poch_q * fq
        poch_c = poch_c * fc
        zk = zk * z
        qbinom = qbinom * rpow  # accumulates q^{0+1+...+(k-1)}
        rpow = rpow * qbase
        sign = -1 if k % 2 else 1
        terms.append(sign * poch_a * qbinom * zk / (poch_q * poch_c))
    return rf_sum(terms)


def limit_transform_check(n: int, c, qbase, z) -> VerificationReport:
    """Equality of the two display forms of the large-b limit:

        limit_two_phi_one(n, c, q, z)
            = 1/(c;q)_n * sum_k (q^{-n};q)_k (z q^{-n}/c;q)_k / (q;q)_k
                                * (c q^n)^k.
    """
    c, qbase, z = as_rational(c), as_rational(qbase), as_rational(z)
    report = VerificationReport(
        "limit-transform",
        params={"n": n, "c": str(c), "q": str(qbase), "z": str(z)},
    )
    index = dict(report.params)
    try:
        lhs = limit_two_phi_one(n, c, qbase, z)
        if c.is_zero:
            raise DegenerateParameters("c = 0")
        poch_c_n = pochhammer(c, qbase, n)
        if poch_c_n.is_zero:
            raise DegenerateParameters(f"(c;q)_{n} vanishes")
        a = qbase ** -n if n else RationalFunction.one()
        d = z * a / c
        w = c * qbase ** n  # the per-term factor q^k (c q^{n-1})^k
        poch_a = poch_d = poch_q = RationalFunction.one()
        wk = RationalFunction.one()
        rpow = RationalFunction.one()
        terms = [RationalFunction.one()]
        for k in range(1, n + 1):
            fq = 1 - qbase * rpow
            if fq.is_zero:
                raise DegenerateParameters(f"(q;q)_{k} vanishes")
            poch_a = poch_a * (1 - a * rpow)
            poch_d = poch_d * (1 - d * rpow)
            poch_q = poch_q * fq
            wk = wk * w
            rpow = rpow * qbase
            terms.append(poch_a * poch_d / poch_q * wk)
        rhs = rf_sum(terms) / poch_c_n
    except DegenerateParameters as exc:
        report.record_skip(index, str(exc))
    else:
        report.record(index, lhs, rhs)
    return report


def qbinomial_coefficient(k: int, s: int, qbase) -> RationalFunction:
    """Coefficient of z^s in the series expansion of 1/(z; qbase)_k,
    in closed form: (qbase^k; qbase)_s / (qbase; qbase)_s.
    """
    qbase = as_rational(qbase)
    den = pochhammer(qbase, qbase, s)
    if den.is_zero:
        raise DegenerateParameters(f"(q;q)_{s} vanishes")
    return pochhammer(qbase ** k, qbase, s) / den


def coeff_u_lemma(k: int, m: int) -> RationalFunction:
    """Closed form for the coefficient of u^{m-k} in 1/(u/q; 1/q^2)_k:

        (q^{-2k}; q^{-2})_{m-k} / (q^{-2}; q^{-2})_{m-k} * q^{-(m-k)},

    defined for m >= k >= 0.
    """
    if k < 0 or m < k:
        raise ValueError(f"need m >= k >= 0, got k={k}, m={m}")
    return qbinomial_coefficient(k, m - k, q_power(-2)) * q_power(k - m)


# ---------------------------------------------------------------------------
# Truncated formal power series in the auxiliary variable u
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in u with RationalFunction coefficients, exact through
    u^order; products truncate above the order."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        coeffs = [as_rational(value)] + [RationalFunction.zero()] * order
        return cls(order, tuple(coeffs))

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "TruncatedSeries":
        coeffs = [RationalFunction.zero()] * (order + 1)
        if 0 <= power <= order:
            coeffs[power] = as_rational(coeff)
        return cls(order, tuple(coeffs))

    def coefficient(self, j: int) -> RationalFunction:
        if j < 0 or j > self.order:
            raise IndexError(f"coefficient u^{j} beyond truncation order {self.order}")
        return self.coeffs[j]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        out = [RationalFunction.zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, tuple(out))

    def scale(self, value) -> "TruncatedSeries":
        value = as_rational(value)
        return TruncatedSeries(self.order, tuple(value * a for a in self.coeffs))

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = c0.reciprocal()
        out = [inv0] + [RationalFunction.zero()] * self.order
        for n in range(1, self.order + 1):
            acc = RationalFunction.zero()
            for i in range(1, n + 1):
                fi = self.coeffs[i]
                if not fi.is_zero:
                    acc = acc + fi * out[n - i]
            out[n] = -inv0 * acc
        return TruncatedSeries(self.order, tuple(out))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            head = "1" if j == 0 else ("u" if j == 1 else f"u^{j}")
            parts.append(f"({c})*{head}" if j else f"{c}")
        return " + ".join(parts) if parts else "0"


def pochhammer_series(a, ratio, k: int, order: int, step: int = 1) -> TruncatedSeries:
    """prod_{j=0}^{k-1} (1 - u^step * a * ratio^j) as a truncated series."""
    if step < 1:
        raise ValueError("step must be positive")
    a = as_rational(a)
    ratio = as_rational(ratio)
    out = TruncatedSeries.constant(1, order)
    coef = a
    for _ in range(k):
        factor = TruncatedSeries.constant(1, order) - TruncatedSeries.monomial(
            step, order, coef
        )
        out = out * factor
        coef = coef * ratio
    return out


def reciprocal_pochhammer_series(
    a, ratio, k: int, order: int, step: int = 1
) -> TruncatedSeries:
    """prod_{j=0}^{k-1} 1/(1 - u^step * a * ratio^j), exact through u^order."""
    return pochhammer_series(a, ratio, k, order, step).reciprocal()


# ---------------------------------------------------------------------------
# Randomized parameter sweeps over the three 2phi1 identities
# ---------------------------------------------------------------------------

def random_fraction(rng: random.Random, height: int = 12, nonzero: bool = False) -> Fraction:
    """A rational with numerator and denominator bounded by ``height``."""
    while True:
        value = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if value or not nonzero:
            return value


def random_hypergeometric_reports(
    n_max: int = 8, tuples_per_n: int = 20, seed: int = DEFAULT_SEED
) -> list[VerificationReport]:
    """Run the three 2phi1 checks over seeded random rational parameters.

    For each n up to n_max, parameters are drawn until ``tuples_per_n``
    non-degenerate tuples have been checked; degenerate draws (vanishing
    Pochhammer denominators) are recorded as skips.  Draw sequences are
    deterministic functions of (seed, check name, n).
    """

    def sweep(name, drawer) -> VerificationReport:
        aggregate = VerificationReport(
            name, params={"n_max": n_max, "tuples_per_n": tuples_per_n, "seed": seed}
        )
        for n in range(n_max + 1):
            rng = random.Random(f"{seed}:{name}:{n}")
            valid = 0
            attempts = 0
            while valid < tuples_per_n:
                attempts += 1
                if attempts > 50 * tuples_per_n:
                    raise RuntimeError(f"{name}: too many degenerate draws at n={n}")
                sub = drawer(n, rng)
                aggregate.merge(sub)
                if sub.n_checked:
                    valid += 1
        return aggregate

    def draw_qchu(n, rng):
        return qchu_check(
            n,
            random_fraction(rng, nonzero=True),
            random_fraction(rng),
            random_fraction(rng, nonzero=True),
        )

    def draw_transform(n, rng):
        spec = HypergeometricSpec(
            n,
            as_rational(random_fraction(rng, nonzero=True)),
            as_rational(random_fraction(rng, nonzero=True)),
            as_rational(random_fraction(rng, nonzero=True)),
            as_rational(random_fraction(rng)),
        )
        return transform_check(spec)

    def draw_limit(n, rng):
        return limit_transform_check(
            n,
            random_fraction(rng, nonzero=True),
            random_fraction(rng, nonzero=True),
            random_fraction(rng),
        )

    return [
        sweep("qchu", draw_qchu),
        sweep("transform", draw_transform),
        sweep("limit-transform", draw_limit),
    ]
