"""Integer partitions, parity-constrained enumeration, and exact weights.

A partition is a weakly decreasing tuple of positive parts.  The statistics
used by the weight formulas are cached on the partition: size, column
lengths of the diagram (the conjugate parts), part multiplicities, and the
number of odd parts.

Two parity constraints matter here: "every odd part has even multiplicity"
(the symplectic side, weight exponent sign +1) and "every even part has
even multiplicity" (the orthogonal side, sign -1).
"""

from __future__ import annotations

from enum import Enum
from functools import cached_property, reduce

from .qseries import pochhammer_inv_q2
from .rational import RationalFunction, q_power


class ParityConstraint(Enum):
    """Which part parities are forced to occur an even number of times."""

    NONE = "none"
    ODD_PARTS_EVEN_MULTIPLICITY = "odd-even-mult"
    EVEN_PARTS_EVEN_MULTIPLICITY = "even-even-mult"

    def admits_run(self, part: int, multiplicity: int) -> bool:
        if self is ParityConstraint.ODD_PARTS_EVEN_MULTIPLICITY:
            return part % 2 == 0 or multiplicity % 2 == 0
        if self is ParityConstraint.EVEN_PARTS_EVEN_MULTIPLICITY:
            return part % 2 == 1 or multiplicity % 2 == 0
        return True

    def admits(self, partition: "Partition") -> bool:
        return all(
            self.admits_run(part, mult)
            for part, mult in partition.multiplicities.items()
        )


class Partition:
    """Immutable integer partition with cached statistics."""

    def __init__(self, parts=()):
        parts = tuple(parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def num_parts(self) -> int:
        """The first column length of the diagram."""
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Column lengths of the diagram, i.e. the conjugate's parts."""
        if not self.parts:
            return ()
        return tuple(
            sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)
        )

    @cached_property
    def odd_count(self) -> int:
        return sum(1 for p in self.parts if p % 2)

    def conjugate(self) -> "Partition":
        return Partition(self.columns)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)!r})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def enumerate_partitions(
    n: int, constraint: ParityConstraint = ParityConstraint.NONE
) -> list[Partition]:
    """All partitions of n admitted by the constraint, in descending
    lexicographic order of their part sequences; n = 0 gives the empty
    partition (which every constraint admits vacuously).

    The generator works run by run -- it fixes a part value and its full
    multiplicity before descending -- so constrained branches are pruned
    without filtering the unconstrained list.
    """
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    out: list[Partition] = []
    acc: list[int] = []

    def descend(remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        for part in range(min(max_part, remaining), 0, -1):
            for mult in range(remaining // part, 0, -1):
                if not constraint.admits_run(part, mult):
                    continue
                acc.extend([part] * mult)
                descend(remaining - part * mult, part - 1)
                del acc[len(acc) - mult:]

    descend(n, n)
    return out


def weight_exponent(partition: Partition, sign: int) -> int:
    """The integer (sum_i columns_i^2 + sign * odd_count) / 2.

    Integrality holds for every partition because both the column-square
    sum and the odd-part count are congruent to the size mod 2; a violation
    would indicate corrupted statistics, so it raises rather than rounding.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    total = sum(c * c for c in partition.columns) + sign * partition.odd_count
    if total % 2:
        raise ValueError(f"non-integral weight exponent for {partition}")
    return total // 2


def _multiplicity_pochhammer(partition: Partition) -> RationalFunction:
    """prod_i (1/q^2; 1/q^2)_{floor(m_i / 2)} over the parts present."""
    return reduce(
        lambda acc, m: acc * pochhammer_inv_q2(m // 2),
        partition.multiplicities.values(),
        RationalFunction.one(),
    )


def summand_weight(partition: Partition, sign: int) -> RationalFunction:
    """The summand attached to a partition on the enumeration side of the
    target identities:

        (1 - q^{-columns_1}) / (q^{weight_exponent} * prod_i
        (1/q^2;1/q^2)_{floor(m_i/2)}).

    The empty partition weighs exactly 0 because 1 - q^0 = 0.
    """
    head = 1 - q_power(-partition.num_parts)
    if head.is_zero:
        return RationalFunction.zero()
    expo = weight_exponent(partition, sign)
    return head * q_power(-expo) / _multiplicity_pochhammer(partition)


def cl_numerator(partition: Partition, sign: int) -> tuple[RationalFunction, int]:
    """The partition-dependent factor of the Cohen-Lenstra type measures,
    without the shared normalizing product: returns (coefficient, power)
    where the measure's lambda-term is coefficient * u^power.

    Differs from summand_weight by the absence of the (1 - q^{-columns_1})
    factor; the empty partition gives (1, 0).
    """
    expo = weight_exponent(partition, sign)
    coeff = q_power(-expo) / _multiplicity_pochhammer(partition)
    return coeff, partition.size
