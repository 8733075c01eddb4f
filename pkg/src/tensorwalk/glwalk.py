"""Separation distance of the fixed-space walk on GL(n, q) representations.

Everything reduces to closed forms in q: the spectrum is the geometric
ladder q^0 .. q^-n, and the separation distance is an alternating q-series
equal to one minus the probability that n uniform vectors span. Formulas
are rational functions of q, so they evaluate at any integer q >= 2; the
prime-power flag only matters for group-theoretic interpretation and for
Monte Carlo elsewhere.

No GL character table is built; the q-series routes make the representation
level bookkeeping unnecessary beyond counting the families of partitions
that index the irreducibles.
"""

import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .chains import Spectrum
from .combinat import Partition, q_binomial
from .errors import ConsistencyError, ExcludedCaseError
from .interpolation import separation_from_spectrum
from .occupancy import qspan_exact


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True  # q itself is prime


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError("q must be at least 2")


def gl_spectrum(n: int, q: int) -> Spectrum:
    """Distinct eigenvalues q^-i, i = 0..n; multiplicities are not tracked.

    Eigenvalue multiplicities would require counting conjugacy classes by
    fixed-space dimension, which nothing downstream needs.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    _check_q(q)
    entries = tuple((Fraction(1, q**i), None) for i in range(n + 1))
    return Spectrum(entries)


def gl_separation_closed_form(n: int, q: int, r: int) -> Fraction:
    """Alternating q-series for the separation distance after r steps."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_q(q)
    if r < 0:
        raise ValueError("need r >= 0")
    total = Fraction(0)
    for b in range(1, n + 1):
        term = q ** comb(b, 2) * q_binomial(n, b, q) * Fraction(1, q ** (r * b))
        total += term if b % 2 == 1 else -term
    return total


def gl_separation_exact(n: int, q: int, r: int) -> Fraction:
    """Exact separation distance, triple-checked.

    The closed form must agree with one minus the probability that r
    uniform vectors span the whole space, and with the eigenvalue-only
    route on the q-ladder spectrum. The one-dimensional group over the
    two-element field is excluded (its walk is trivial and the extremal
    representation argument needs a second degree-one character).
    """
    if (n, q) == (1, 2):
        raise ExcludedCaseError("the walk on GL(1,2) is excluded")
    value = gl_separation_closed_form(n, q, r)
    by_span = 1 - qspan_exact(n, r, n, q)
    if value != by_span:
        raise ConsistencyError(
            f"separation closed form disagrees with span route at "
            f"n={n} q={q} r={r}: {value} vs {by_span}"
        )
    by_spectrum = separation_from_spectrum(gl_spectrum(n, q).eigenvalues, r)
    if value != by_spectrum:
        raise ConsistencyError(
            f"separation closed form disagrees with spectral route at "
            f"n={n} q={q} r={r}: {value} vs {by_spectrum}"
        )
    return value


def gl_separation_bounds(q: int, c: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds for the separation distance n + c steps in."""
    _check_q(q)
    if c < 0:
        raise ValueError("need c >= 0")
    lower = Fraction(1, q ** (c + 1)) - Fraction(4, q ** (2 * c + 3))
    upper = Fraction(2, q ** (c + 1))
    return lower, upper


def check_separation_within_bounds(n: int, q: int, c: int) -> bool:
    """Exact check that the distance at n + c steps sits inside the bounds."""
    lower, upper = gl_separation_bounds(q, c)
    value = gl_separation_exact(n, q, n + c)
    if not lower <= value <= upper:
        raise ConsistencyError(
            f"separation at n={n} q={q} c={c} escapes bounds: "
            f"{lower} <= {value} <= {upper} fails"
        )
    return True


class EulerProductLimit(NamedTuple):
    value: float
    factors: int


def gl_separation_limit(q: int, c: int) -> EulerProductLimit:
    """Large-n limit of the separation distance n + c steps in.

    One minus an infinite product of factors (1 - q^-(c+m)); the product is
    truncated once a factor differs from 1 by less than machine precision,
    and the truncation index is reported for reproducibility.
    """
    _check_q(q)
    if c < 0:
        raise ValueError("need c >= 0")
    eps = sys.float_info.epsilon
    product = 1.0
    m = 0
    while True:
        m += 1
        deviation = float(q) ** -(c + m)
        if deviation < eps:
            break
        product *= 1.0 - deviation
        if m > 10_000:
            raise RuntimeError("product did not stabilize")
    return EulerProductLimit(value=1.0 - product, factors=m - 1)


def _mobius(d: int) -> int:
    mu = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            mu = -mu
        p += 1
    if d > 1:
        mu = -mu
    return mu


def cuspidal_count(m: int, q: int) -> int:
    """Number of degree-m cuspidal characters, by Moebius inversion over q-powers."""
    if m < 1:
        raise ValueError("need m >= 1")
    _check_q(q)
    total = 0
    for d in range(1, m + 1):
        if m % d == 0:
            total += _mobius(d) * (q ** (m // d) - 1)
    if total % m != 0:
        raise ConsistencyError(f"cuspidal count not divisible: m={m} q={q} sum={total}")
    return total // m


@dataclass(frozen=True)
class GlIrrepFamily:
    """Assignment of partitions to cuspidals, indexing one GL irreducible.

    Each entry is (cuspidal degree m, index of the cuspidal among the
    degree-m ones, partition); the weighted sizes sum to the degree. The
    unit character of the one-dimensional group sits at (1, 0).
    """

    q: int
    assignments: tuple[tuple[int, int, Partition], ...]

    def __post_init__(self):
        seen = set()
        for m, idx, lam in self.assignments:
            if m < 1:
                raise ValueError("cuspidal degree must be positive")
            if not 0 <= idx < cuspidal_count(m, self.q):
                raise ValueError(f"cuspidal index {idx} invalid for degree {m}")
            if lam.size == 0:
                raise ValueError("assigned partitions must be nonempty")
            if (m, idx) in seen:
                raise ValueError("duplicate cuspidal in family")
            seen.add((m, idx))

    @property
    def degree(self) -> int:
        return sum(m * lam.size for m, _, lam in self.assignments)

    @property
    def unit_partition(self) -> Partition:
        for m, idx, lam in self.assignments:
            if (m, idx) == (1, 0):
                return lam
        return Partition()

    def avoids_unit(self) -> bool:
        return self.unit_partition.size == 0


def count_gl_families(n: int, q: int, avoid_e: bool = False) -> int:
    """Number of degree-n families of partitions over the cuspidals.

    Generating-function coefficient extraction in exact integers: each
    cuspidal of degree m contributes a partition generating function in
    x^m. With avoid_e, the factor of the distinguished degree-one unit
    cuspidal is dropped, counting families whose unit slot is empty.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    _check_q(q)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for m in range(1, n + 1):
        colors = cuspidal_count(m, q)
        if m == 1 and avoid_e:
            colors -= 1
        if colors <= 0:
            continue
        for k in range(1, n // m + 1):
            j = m * k
            # multiply by (1 - x^j)^(-colors)
            new = [0] * (n + 1)
            for t in range(n + 1):
                acc = 0
                i = 0
                while i * j <= t:
                    acc += comb(colors + i - 1, i) * coeffs[t - i * j]
                    i += 1
                new[t] = acc
            coeffs = new
    return coeffs[n]


def gl_profile_distance(n: int, q: int, c: int) -> float:
    """Gap between the finite-n separation distance and its large-n limit."""
    exact = gl_separation_exact(n, q, n + c)
    limit = gl_separation_limit(q, c).value
    return abs(float(exact) - limit)


def check_alternating_terms_decreasing(n: int, q: int, r: int) -> bool:
    """Exact check that the closed form's term magnitudes strictly decrease."""
    terms = [
        q ** comb(b, 2) * q_binomial(n, b, q) * Fraction(1, q ** (r * b))
        for b in range(1, n + 1)
    ]
    for t1, t2 in zip(terms, terms[1:]):
        if not t2 < t1:
            raise ConsistencyError(
                f"alternating terms fail to decrease at n={n} q={q} r={r}"
            )
    return True
