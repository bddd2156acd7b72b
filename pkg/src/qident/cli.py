"""Command-line front end: verification, enumeration, evaluation, sampling.

Output is one JSON object per line (``--format json``, the default) or a
human-readable line per check (``--format text``).  Identical invocations
produce byte-identical output: all randomness is seeded, serialization is
canonical (sorted keys), and orderings are deterministic.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import distributions, identities
from .distributions import Family, MeasureParams
from .partitions import ParityConstraint, enumerate_partitions, summand_weight
from .qseries import DEFAULT_SEED, random_hypergeometric_reports
from .report import VerificationReport

_CONSTRAINTS = {
    "none": ParityConstraint.NONE,
    "odd-even-mult": ParityConstraint.ODD_PARTS_EVEN_MULTIPLICITY,
    "even-even-mult": ParityConstraint.EVEN_PARTS_EVEN_MULTIPLICITY,
}

VERIFY_SELECTORS = (
    "anz1",
    "anz2",
    "anz3",
    "eq4",
    "eq5",
    "splits",
    "qseries",
    "marginals",
    "normalization",
    "all",
)

_DEFAULT_TAIL_TOLERANCE = Fraction(1, 10**9)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational 'p/r': {text}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qident",
        description=(
            "Exact verification of q-series partition identities and the "
            "associated partition distributions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    default_m_max = int(os.environ.get("QIDENT_M_MAX", "10"))
    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("selector", choices=VERIFY_SELECTORS)
    verify.add_argument("--m-max", type=int, default=default_m_max)
    verify.add_argument("--order", type=int, default=12, help="series order D")
    verify.add_argument("--k-max", type=int, default=3, help="marginal column half-range")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--tuples-per-n", type=int, default=20)
    verify.add_argument("--qseries-n-max", type=int, default=8)
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.set_defaults(func=cmd_verify)

    parts = sub.add_parser("partitions", help="enumerate constrained partitions")
    parts.add_argument("--n", type=int, required=True)
    parts.add_argument("--constraint", choices=sorted(_CONSTRAINTS), default="none")
    parts.add_argument("--weights", choices=("none", "sp", "o"), default="none")
    parts.add_argument("--format", choices=("json", "text"), default="json")
    parts.set_defaults(func=cmd_partitions)

    dist = sub.add_parser("dist", help="evaluate or sample the measures")
    dist_sub = dist.add_subparsers(dest="action", required=True)

    def add_dist_args(p):
        p.add_argument("--family", choices=("sp", "o"), required=True)
        p.add_argument("--q", type=_fraction, required=True)
        p.add_argument("--u", type=_fraction, required=True)
        p.add_argument("--max-size", type=int, default=6)
        p.add_argument("--tail-tol", type=_fraction, default=_DEFAULT_TAIL_TOLERANCE)
        p.add_argument("--format", choices=("json", "text"), default="json")

    deval = dist_sub.add_parser("eval", help="per-partition probabilities")
    add_dist_args(deval)
    deval.set_defaults(func=cmd_dist_eval)

    dsample = dist_sub.add_parser("sample", help="draw partitions")
    add_dist_args(dsample)
    dsample.add_argument("--count", type=int, default=10)
    dsample.add_argument("--seed", type=int, default=DEFAULT_SEED)
    dsample.set_defaults(func=cmd_dist_sample)

    return parser


def _verify_reports(args) -> list[VerificationReport]:
    m_max = args.m_max
    if m_max < 1:
        raise _Usage("--m-max must be at least 1")
    selector = args.selector
    reports: list[VerificationReport] = []
    if selector == "anz1":
        reports.append(identities.check_anz1(m_max))
    elif selector == "anz2":
        reports.append(identities.check_anz2(m_max))
    elif selector == "anz3":
        reports.append(identities.check_anz3(m_max))
    elif selector == "eq4":
        reports.append(identities.check_eq4(m_max))
        reports.append(identities.check_a2_sum(m_max))
        reports.append(identities.check_b2_sum(m_max))
        reports.append(identities.check_final_combine(m_max))
    elif selector == "eq5":
        reports.append(identities.check_eq5(m_max))
        reports.append(identities.check_c1_sum(m_max))
        reports.append(identities.check_c2_sum(m_max))
    elif selector == "splits":
        reports.append(identities.check_splits(m_max))
        reports.append(identities.check_d(m_max))
    elif selector == "qseries":
        reports.extend(
            random_hypergeometric_reports(
                n_max=args.qseries_n_max,
                tuples_per_n=args.tuples_per_n,
                seed=args.seed,
            )
        )
    elif selector == "marginals":
        for family in Family:
            reports.append(
                distributions.marginal_vs_bruteforce(family, args.k_max, args.order)
            )
    elif selector == "normalization":
        for family in Family:
            reports.append(distributions.normalization_check(family, args.order))
    else:  # all
        reports.extend(
            identities.verify_all(
                m_max,
                seed=args.seed,
                qseries_n_max=args.qseries_n_max,
                tuples_per_n=args.tuples_per_n,
            )
        )
        for family in Family:
            reports.append(
                distributions.marginal_vs_bruteforce(family, args.k_max, args.order)
            )
            reports.append(distributions.normalization_check(family, args.order))
    return reports


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    for report in reports:
        if args.format == "json":
            _emit(report.to_json_dict())
        else:
            print(report.summary())
    return 0 if all(r.passed for r in reports) else 1


def cmd_partitions(args) -> int:
    if args.n < 0:
        raise _Usage("--n must be nonnegative")
    constraint = _CONSTRAINTS[args.constraint]
    sign = {"sp": +1, "o": -1}.get(args.weights)
    for p in enumerate_partitions(args.n, constraint):
        weight = summand_weight(p, sign) if sign is not None else None
        if args.format == "json":
            row = {"partition": p.to_json()}
            if sign is not None:
                row["weight"] = weight.as_dict()
            _emit(row)
        else:
            line = str(p.to_json())
            if sign is not None:
                line += f"  weight={weight}"
            print(line)
    return 0


def _measure_params(args) -> MeasureParams:
    try:
        return MeasureParams.with_tolerance(args.q, args.u, args.tail_tol)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc


def cmd_dist_eval(args) -> int:
    family = Family(args.family)
    params = _measure_params(args)
    if args.max_size < 0:
        raise _Usage("--max-size must be nonnegative")
    total = Fraction(0)
    for n in range(args.max_size + 1):
        for p in enumerate_partitions(n, family.constraint):
            pv = distributions.prob(p, family, params)
            total += pv.value
            if args.format == "json":
                _emit(
                    {
                        "partition": p.to_json(),
                        "probability": str(pv.value),
                        "tail_bound": str(pv.tail_bound),
                    }
                )
            else:
                print(f"{p.to_json()}  p={float(pv.value):.6g} ({pv.value})")
    bound = 1 - (1 - params.tail_bound) * total
    if bound < 0:
        bound = Fraction(0)
    summary = {
        "support_probability": str(total),
        "truncated_mass_bound": str(bound),
    }
    if args.format == "json":
        _emit(summary)
    else:
        print(f"total={float(total):.6g}  truncated_mass_bound={float(bound):.3g}")
    return 0


def cmd_dist_sample(args) -> int:
    family = Family(args.family)
    params = _measure_params(args)
    if args.count < 0:
        raise _Usage("--count must be nonnegative")
    if args.max_size < 0:
        raise _Usage("--max-size must be nonnegative")
    result = distributions.sample(family, params, args.max_size, args.count, args.seed)
    if args.format == "json":
        _emit(result.to_json_dict())
    else:
        for p in result.partitions:
            print(p.to_json())
        print(
            f"seed={result.seed} support={float(result.support_probability):.6g} "
            f"truncated_mass_bound={float(result.truncated_mass_bound):.3g}"
        )
    return 0


class _Usage(Exception):
    """Semantic argument error, reported like a parse error (exit 2)."""


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))  # exits with status 2
        return 2  # unreachable; keeps type-checkers happy


if __name__ == "__main__":
    sys.exit(main())
