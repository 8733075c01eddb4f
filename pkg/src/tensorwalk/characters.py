"""Exact character theory of small symmetric groups.

Character values come from the Murnaghan-Nakayama rule, implemented on
first-column hook length sets (beta sets), so the whole table is integer
arithmetic. The practical bound on n keeps tables small; it can be raised
via configuration, see `tensorwalk.config`.
"""

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial

from .combinat import Partition, count_skew_syt_row, enumerate_partitions
from .config import effective_max_n
from .errors import ConsistencyError, SizeLimitError


@dataclass
class ClassDescriptor:
    """Conjugacy class of the symmetric group, described by its cycle type."""

    cycle_type: Partition
    class_size: int
    fixed_points: int
    cycle_counts: dict[int, int]
    num_cycles: int
    sign: int


def _check_n(n: int) -> None:
    limit = effective_max_n()
    if not 1 <= n <= limit:
        raise SizeLimitError(
            f"n={n} outside the supported range 1..{limit} "
            "(raise TENSORWALK_MAX_N to override)"
        )


def conjugacy_classes(n: int) -> list[ClassDescriptor]:
    """One descriptor per cycle type, in the fixed partition order."""
    _check_n(n)
    out = []
    for ct in enumerate_partitions(n):
        counts = Counter(ct.parts)
        centralizer = 1
        for j, m in counts.items():
            centralizer *= j**m * factorial(m)
        assert factorial(n) % centralizer == 0
        out.append(
            ClassDescriptor(
                cycle_type=ct,
                class_size=factorial(n) // centralizer,
                fixed_points=counts.get(1, 0),
                cycle_counts=dict(counts),
                num_cycles=len(ct),
                sign=(-1) ** (n - len(ct)),
            )
        )
    return out


def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(sorted(lam[i] + (ell - 1 - i) for i in range(ell)))


@cache
def _mn_value(beta: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # Murnaghan-Nakayama on beta sets: removing a border strip of length t
    # moves one element of the set down by t; the crossing count gives the
    # sign. Recursion consumes cycle lengths one at a time.
    if not cycles:
        return 1
    t, rest = cycles[0], cycles[1:]
    members = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb >= 0 and nb not in members:
            height = sum(1 for x in beta if nb < x < b)
            new_beta = tuple(sorted(members - {b} | {nb}))
            total += (-1) ** height * _mn_value(new_beta, rest)
    return total


def character_value(lam: Partition, cycle_type: Partition) -> int:
    """Irreducible character of shape `lam` on the given cycle type."""
    if lam.size != cycle_type.size:
        raise ValueError("shape and cycle type must have equal size")
    return _mn_value(_beta_set(lam), tuple(sorted(cycle_type.parts, reverse=True)))


class CharacterTable:
    """Full integer character table, rows by shape, columns by cycle type."""

    def __init__(self, n: int, partitions, classes, values):
        self.n = n
        self.partitions = tuple(partitions)
        self.classes = tuple(classes)
        self.values = tuple(tuple(row) for row in values)
        self._row_index = {p: i for i, p in enumerate(self.partitions)}
        self._col_index = {c.cycle_type: j for j, c in enumerate(self.classes)}

    def value(self, lam: Partition, cycle_type: Partition) -> int:
        return self.values[self._row_index[lam]][self._col_index[cycle_type]]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self._row_index[lam]]

    def dimension(self, lam: Partition) -> int:
        return self.value(lam, Partition([1] * self.n))

    def check_row_orthogonality(self) -> None:
        target = factorial(self.n)
        for i, lam in enumerate(self.partitions):
            for j, mu in enumerate(self.partitions):
                total = sum(
                    c.class_size * self.values[i][k] * self.values[j][k]
                    for k, c in enumerate(self.classes)
                )
                expected = target if i == j else 0
                if total != expected:
                    raise ConsistencyError(
                        f"row orthogonality fails for ({lam}, {mu}): {total}"
                    )

    def check_column_orthogonality(self) -> None:
        order = factorial(self.n)
        for j, cj in enumerate(self.classes):
            for k, ck in enumerate(self.classes):
                total = sum(row[j] * row[k] for row in self.values)
                expected = order // cj.class_size if j == k else 0
                if total != expected:
                    raise ConsistencyError(
                        "column orthogonality fails for "
                        f"({cj.cycle_type}, {ck.cycle_type}): {total}"
                    )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition"] + [str(c.cycle_type) for c in self.classes])
        for lam, row in zip(self.partitions, self.values):
            writer.writerow([str(lam)] + list(row))
        return buf.getvalue()


def character_table(n: int) -> CharacterTable:
    """Integer character table of the symmetric group on n letters."""
    _check_n(n)
    partitions = enumerate_partitions(n)
    classes = conjugacy_classes(n)
    values = [
        [character_value(lam, c.cycle_type) for c in classes] for lam in partitions
    ]
    return CharacterTable(n, partitions, classes, values)


def defining_character_values(classes) -> list[int]:
    """Values of the n-dimensional permutation character (fixed points)."""
    return [c.fixed_points for c in classes]


def fixed_point_character_sum(
    n: int, lam: Partition, i: int, table: CharacterTable | None = None
) -> int:
    """Character sum over all permutations with exactly i fixed points.

    Evaluated two independent ways, by classes and by an inclusion-exclusion
    formula in skew tableau counts, and the two must agree exactly.
    """
    if lam.size != n:
        raise ValueError("shape size must equal n")
    if not 0 <= i <= n:
        raise ValueError("fixed point count out of range")
    if table is None:
        table = character_table(n)
    by_classes = sum(
        c.class_size * table.value(lam, c.cycle_type)
        for c in table.classes
        if c.fixed_points == i
    )
    by_formula = Fraction(0)
    for j in range(n - i + 1):
        term = Fraction((-1) ** j, factorial(j)) * count_skew_syt_row(lam, n - i - j)
        by_formula += term
    by_formula *= Fraction(factorial(n), factorial(i))
    if by_formula != by_classes:
        raise ConsistencyError(
            f"fixed point character sum mismatch for n={n} lam={lam} i={i}: "
            f"classes={by_classes} formula={by_formula}"
        )
    return by_classes


def signed_fixed_point_sum(n: int, i: int) -> int:
    """Sign sum over permutations with exactly i fixed points (closed form)."""
    if not 0 <= i <= n:
        raise ValueError("fixed point count out of range")
    if i == n:
        return 1
    return (-1) ** (n - i + 1) * comb(n, i) * (n - i - 1)


def tensor_multiplicity(
    n: int,
    lam: Partition,
    eta_values,
    rho: Partition,
    table: CharacterTable | None = None,
) -> int:
    """Multiplicity of `rho` in the tensor product of `lam` with a character.

    `eta_values` lists the (real) character values of the tensoring factor,
    aligned with `conjugacy_classes(n)`. The averaged triple product must be
    a nonnegative integer; anything else raises.
    """
    if table is None:
        table = character_table(n)
    total = Fraction(0)
    for k, c in enumerate(table.classes):
        total += (
            Fraction(c.class_size)
            * table.value(lam, c.cycle_type)
            * Fraction(eta_values[k])
            * table.value(rho, c.cycle_type)
        )
    value = total / factorial(n)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            f"tensor multiplicity not a nonnegative integer: "
            f"lam={lam} rho={rho} value={value}"
        )
    return int(value)
