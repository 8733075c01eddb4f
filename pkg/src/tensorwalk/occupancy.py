"""Occupancy engines: exact balls-in-boxes and random-vector span laws.

The exact routes return Fractions. Monte Carlo verifiers use a counter-based
generator so that (seed, stream_id) fully determines the draw sequence and
distinct streams are independent; merged estimates are therefore
reproducible bit for bit.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .combinat import q_binomial
from .errors import UnsupportedFieldError

_CHUNK = 1 << 14


@dataclass(frozen=True)
class RandomSource:
    """Reproducible random stream: seed picks the experiment, stream_id the lane."""

    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.PCG64(seq))


@dataclass(frozen=True)
class McEstimate:
    """Empirical frequency with its binomial standard error."""

    successes: int
    samples: int

    @property
    def estimate(self) -> float:
        return self.successes / self.samples

    @property
    def stderr(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1.0 - p) / self.samples)

    def within(self, exact, sigmas: float = 4.0) -> bool:
        """True when the estimate is within `sigmas` standard errors of exact.

        A zero standard error (all successes or none) demands exact match.
        """
        err = self.stderr
        if err == 0.0:
            return self.estimate == float(exact)
        return abs(self.estimate - float(exact)) <= sigmas * err


def merge_estimates(parts) -> McEstimate:
    parts = list(parts)
    return McEstimate(
        successes=sum(p.successes for p in parts),
        samples=sum(p.samples for p in parts),
    )


def occupancy_exact(a: int, r: int, n: int) -> Fraction:
    """Probability that r balls dropped into n boxes occupy exactly a boxes.

    Inclusion-exclusion over the occupied set; 0^0 = 1 so that r = 0 gives
    a point mass at a = 0.
    """
    if not 0 <= a <= n:
        raise ValueError("need 0 <= a <= n")
    if r < 0:
        raise ValueError("need r >= 0")
    total = Fraction(0)
    for b in range(n - a, n + 1):
        sign = (-1) ** (b - (n - a))
        total += sign * comb(a, n - b) * Fraction(n - b, n) ** r
    return comb(n, a) * total


def occupancy_chain_power(n: int, r: int) -> list[Fraction]:
    """Distribution of the occupied-box count as a pure-birth chain power.

    The count of occupied boxes holds with probability a/n and steps up
    otherwise; starting from 0, the r-step law must match `occupancy_exact`
    entry for entry.
    """
    if r < 0:
        raise ValueError("need r >= 0")
    dist = [Fraction(0)] * (n + 1)
    dist[0] = Fraction(1)
    for _ in range(r):
        nxt = [Fraction(0)] * (n + 1)
        for a, mass in enumerate(dist):
            if mass == 0:
                continue
            hold = Fraction(a, n)
            nxt[a] += mass * hold
            if a < n:
                nxt[a + 1] += mass * (1 - hold)
        dist = nxt
    return dist


def qspan_exact(a: int, r: int, n: int, q: int) -> Fraction:
    """Probability that r uniform vectors in an n-space over F_q span dim a."""
    if not 0 <= a <= n:
        raise ValueError("need 0 <= a <= n")
    if r < 0:
        raise ValueError("need r >= 0")
    if q < 2:
        raise ValueError("q must be at least 2")
    total = Fraction(0)
    for b in range(n - a, n + 1):
        j = b - (n - a)
        sign = (-1) ** j
        total += (
            sign
            * q ** comb(j, 2)
            * q_binomial(a, n - b, q)
            * Fraction(1, q ** (r * b))
        )
    return q_binomial(n, a, q) * total


def qspan_chain_power(n: int, r: int, q: int) -> list[Fraction]:
    """Span-dimension law as a pure-birth chain with hold probability q^(a-n)."""
    if r < 0:
        raise ValueError("need r >= 0")
    dist = [Fraction(0)] * (n + 1)
    dist[0] = Fraction(1)
    for _ in range(r):
        nxt = [Fraction(0)] * (n + 1)
        for a, mass in enumerate(dist):
            if mass == 0:
                continue
            hold = Fraction(1, q ** (n - a))
            nxt[a] += mass * hold
            if a < n:
                nxt[a + 1] += mass * (1 - hold)
        dist = nxt
    return dist


def occupancy_mc(a: int, r: int, n: int, samples: int, src: RandomSource) -> McEstimate:
    """Empirical frequency of exactly a occupied boxes after r drops."""
    if samples < 1:
        raise ValueError("need samples >= 1")
    if not 0 <= a <= n:
        raise ValueError("need 0 <= a <= n")
    if r == 0:
        return McEstimate(successes=samples if a == 0 else 0, samples=samples)
    rng = src.generator()
    successes = 0
    remaining = samples
    while remaining > 0:
        chunk = min(_CHUNK, remaining)
        draws = rng.integers(0, n, size=(chunk, r))
        draws.sort(axis=1)
        distinct = 1 + (np.diff(draws, axis=1) != 0).sum(axis=1)
        successes += int((distinct == a).sum())
        remaining -= chunk
    return McEstimate(successes=successes, samples=samples)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _rank_mod(rows: list[list[int]], q: int) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    rows = [row[:] for row in rows]
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] % q:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def qspan_mc(
    a: int, r: int, n: int, q: int, samples: int, src: RandomSource
) -> McEstimate:
    """Empirical frequency that r uniform vectors over F_q span dimension a.

    Requires prime q: ranks are computed by elimination modulo q, and no
    extension-field arithmetic is provided (the exact formulas cover the
    prime-power case).
    """
    if samples < 1:
        raise ValueError("need samples >= 1")
    if not _is_prime(q):
        raise UnsupportedFieldError(f"q={q} is not prime; Monte Carlo needs a prime field")
    if a > n or a < 0:
        return McEstimate(successes=0, samples=samples)
    if r == 0:
        return McEstimate(successes=samples if a == 0 else 0, samples=samples)
    rng = src.generator()
    successes = 0
    remaining = samples
    while remaining > 0:
        chunk = min(_CHUNK, remaining)
        draws = rng.integers(0, q, size=(chunk, r, n)).tolist()
        for mat in draws:
            if _rank_mod(mat, q) == a:
                successes += 1
        remaining -= chunk
    return McEstimate(successes=successes, samples=samples)


def poisson_not01(c: float) -> float:
    """Probability that a Poisson variable with mean e^(-c) is neither 0 nor 1."""
    if c < -700.0:
        return 1.0
    mean = math.exp(-c)
    if mean > 700.0:
        return 1.0
    return 1.0 - math.exp(-mean) * (1.0 + mean)
