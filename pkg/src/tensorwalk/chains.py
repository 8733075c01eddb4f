"""Chain-level containers: exact kernels, spectra, separation curves."""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError
from .linalg import identity_matrix, mat_mul

logger = logging.getLogger("tensorwalk")


def format_exact(value: Fraction) -> str:
    """Stable "num/den" serialization of an exact rational."""
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float) -> str:
    return f"{value:.17g}"


class TransitionKernel:
    """Square stochastic matrix over exact rationals, with stationary vector.

    States are arbitrary hashable labels. Construction validates exact row
    sums, stationarity normalization and detailed balance, so any kernel
    that exists is reversible. Powers are cached and computed by repeated
    exact multiplication.
    """

    def __init__(self, states, matrix, stationary):
        self.states = tuple(states)
        self.matrix = tuple(
            tuple(Fraction(x) for x in row) for row in matrix
        )
        self.stationary = tuple(Fraction(x) for x in stationary)
        self._state_index = {s: i for i, s in enumerate(self.states)}
        if len(self._state_index) != len(self.states):
            raise ValueError("duplicate state labels")
        self._powers = [identity_matrix(len(self.states))]
        self.validate()

    @property
    def size(self) -> int:
        return len(self.states)

    def index(self, state) -> int:
        return self._state_index[state]

    def validate(self) -> None:
        n = self.size
        if any(len(row) != n for row in self.matrix) or len(self.stationary) != n:
            raise ValueError("dimension mismatch")
        one = Fraction(1)
        for i, row in enumerate(self.matrix):
            if any(x < 0 for x in row):
                raise ConsistencyError(f"negative entry in row {self.states[i]}")
            if sum(row) != one:
                raise ConsistencyError(f"row {self.states[i]} does not sum to 1")
        if any(p < 0 for p in self.stationary) or sum(self.stationary) != one:
            raise ConsistencyError("stationary vector does not sum to 1")
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.stationary[i] * self.matrix[i][j]
                rhs = self.stationary[j] * self.matrix[j][i]
                if lhs != rhs:
                    raise ConsistencyError(
                        "detailed balance fails for pair "
                        f"({self.states[i]}, {self.states[j]})"
                    )

    def power(self, r: int):
        """Exact r-step transition matrix (cached incrementally)."""
        if r < 0:
            raise ValueError("negative power")
        while len(self._powers) <= r:
            self._powers.append(mat_mul(self._powers[-1], self.matrix))
        return self._powers[r]

    def step_distribution(self, start, r: int) -> tuple[Fraction, ...]:
        """Distribution after r steps from a point mass at `start`."""
        return self.power(r)[self.index(start)]


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues, sorted descending, with optional multiplicities."""

    entries: tuple[tuple[Fraction, int | None], ...]

    def __post_init__(self):
        values = [v for v, _ in self.entries]
        if sorted(values, reverse=True) != values or len(set(values)) != len(values):
            raise ValueError("eigenvalues must be distinct and sorted descending")

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[int | None, ...]:
        return tuple(m for _, m in self.entries)

    def total_multiplicity(self) -> int | None:
        ms = self.multiplicities
        if any(m is None for m in ms):
            return None
        return sum(ms)


@dataclass(frozen=True)
class CurveRecord:
    r: int
    value: Fraction
    route: str

    @property
    def float_value(self) -> float:
        return float(self.value)


@dataclass
class SeparationCurve:
    """Per-step distance values, possibly from several computation routes."""

    n: int
    q: int | None = None
    records: list[CurveRecord] = field(default_factory=list)

    def add(self, r: int, value: Fraction, route: str) -> None:
        value = Fraction(value)
        if not 0 <= value <= 1:
            raise ConsistencyError(
                f"distance value out of [0,1]: r={r} route={route} value={value}"
            )
        self.records.append(CurveRecord(r, value, route))

    def routes(self) -> list[str]:
        seen = []
        for rec in self.records:
            if rec.route not in seen:
                seen.append(rec.route)
        return seen

    def monotonicity_violations(self) -> list[tuple[str, int, int]]:
        """(route, r_prev, r) triples where the value increased with r.

        Non-increase holds in every case computed here but is not asserted
        hard; callers log the violations instead of failing.
        """
        out = []
        for route in self.routes():
            recs = sorted(
                (rec for rec in self.records if rec.route == route),
                key=lambda rec: rec.r,
            )
            for prev, cur in zip(recs, recs[1:]):
                if cur.value > prev.value:
                    out.append((route, prev.r, cur.r))
        return out

    def warn_if_not_monotone(self) -> None:
        for route, r_prev, r_cur in self.monotonicity_violations():
            logger.warning(
                "distance increased with step count: route=%s r=%d->%d",
                route,
                r_prev,
                r_cur,
            )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.q is None:
            writer.writerow(["r", "s_exact", "s_float", "route"])
            for rec in sorted(self.records, key=lambda x: (x.r, x.route)):
                writer.writerow(
                    [rec.r, format_exact(rec.value), format_float(rec.float_value), rec.route]
                )
        else:
            writer.writerow(["r", "q", "s_exact", "s_float", "route"])
            for rec in sorted(self.records, key=lambda x: (x.r, x.route)):
                writer.writerow(
                    [
                        rec.r,
                        self.q,
                        format_exact(rec.value),
                        format_float(rec.float_value),
                        rec.route,
                    ]
                )
        return buf.getvalue()

    def to_json(self) -> str:
        obj: dict = {"n": self.n}
        if self.q is not None:
            obj["q"] = self.q
        obj["records"] = [
            {
                "r": rec.r,
                "s_exact": format_exact(rec.value),
                "s_float": float(format_float(rec.float_value)),
                "route": rec.route,
            }
            for rec in sorted(self.records, key=lambda x: (x.r, x.route))
        ]
        return json.dumps(obj, indent=2) + "\n"
