"""Prime factorization and kernel (radical) arithmetic.

The kernel of a natural number m, written k(m), is the product of the
distinct primes dividing m, i.e. the largest squarefree divisor of m.
By convention k(1) = 1.

Single values are factored by trial division with a hard size bound so
that oversized inputs fail loudly instead of stalling.  Bulk evaluation
over a range [1, x] goes through a segmented multiplicative sieve: each
prime p <= sqrt(x) contributes one factor p to the kernel of its
multiples, the p-power content is divided out of a parallel remainder
array, and whatever remainder survives (> 1) is the unique prime factor
above sqrt(x).  Segments are processed left to right; the output is
identical to a one-shot sieve regardless of segment size.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_FACTOR_LIMIT",
    "DEFAULT_SEGMENT_SIZE",
    "DEFAULT_SIEVE_LIMIT",
    "FactorLimitError",
    "SieveLimitError",
    "Factorization",
    "RadicalTable",
    "factorize",
    "primes_up_to",
    "radical",
    "radical_sieve",
]

DEFAULT_FACTOR_LIMIT = 10**12

# Tables above this many entries are built segment by segment.
DEFAULT_SEGMENT_SIZE = 1 << 24

# Refuse tables larger than this outright; ~1e9 entries is already past
# what the counting routines need at desk scale.
DEFAULT_SIEVE_LIMIT = 1 << 30


class FactorLimitError(ValueError):
    """Input exceeds the configured trial-division bound."""


class SieveLimitError(ValueError):
    """Requested table exceeds the configured sieve budget."""


@dataclass(frozen=True, slots=True)
class Factorization:
    """Factorization of m into (prime, exponent) pairs, primes ascending."""

    m: int
    factors: tuple[tuple[int, int], ...]

    def radical(self) -> int:
        """Product of the distinct primes dividing m; 1 when m = 1."""
        r = 1
        for p, _ in self.factors:
            r *= p
        return r


def factorize(m: int, *, limit: int = DEFAULT_FACTOR_LIMIT) -> Factorization:
    """Factor m by trial division.

    Parameters
    ----------
    m : int
        Value to factor, 1 <= m <= limit.
    limit : int
        Largest input accepted (default 10**12); anything bigger raises
        FactorLimitError rather than spinning in the trial loop.

    Returns
    -------
    Factorization
        Ordered (prime, exponent) pairs; empty for m = 1.
    """
    if m < 1:
        raise ValueError(f"cannot factor {m}: expected an integer >= 1")
    if m > limit:
        raise FactorLimitError(
            f"{m} is too large to factor by trial division (limit {limit})"
        )
    factors = []
    rest = m
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    # remaining candidates have the form 6k +- 1
    p, step = 5, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(m, tuple(factors))


def radical(m: int, *, limit: int = DEFAULT_FACTOR_LIMIT) -> int:
    """Kernel k(m): the product of the distinct primes dividing m."""
    return factorize(m, limit=limit).radical()


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by a plain byte sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(2, n + 1) if flags[i]]


class RadicalTable:
    """Kernel values for every m in [1, limit].

    ``values`` is a numpy array of length limit + 1 with values[m] = k(m)
    for 1 <= m <= limit (index 0 is unused and holds 0).  The dtype is
    the narrowest signed integer that holds the limit itself, since
    k(m) <= m.
    """

    __slots__ = ("limit", "values")

    def __init__(self, limit: int, values: np.ndarray):
        self.limit = limit
        self.values = values

    def __len__(self) -> int:
        return self.limit

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.limit:
            raise IndexError(f"m={m} outside table range [1, {self.limit}]")
        return int(self.values[m])


def _radical_segment(lo: int, hi: int, primes: list[int], dtype) -> np.ndarray:
    """Kernels for [lo, hi] given all primes up to sqrt(hi)."""
    n = hi - lo + 1
    rad = np.ones(n, dtype=dtype)
    rem = np.arange(lo, hi + 1, dtype=dtype)
    for p in primes:
        start = ((lo + p - 1) // p) * p
        if start > hi:
            continue
        rad[start - lo :: p] *= p
        # strip the full p-power content: multiples of p^e get divided
        # once at each power level, removing p^e overall
        pe = p
        while pe <= hi:
            s = ((lo + pe - 1) // pe) * pe
            if s <= hi:
                rem[s - lo :: pe] //= p
            pe *= p
    big = rem > 1  # single leftover prime factor > sqrt(hi)
    rad[big] *= rem[big]
    return rad


def radical_sieve(
    x: int,
    *,
    segment_size: int | None = None,
    max_limit: int = DEFAULT_SIEVE_LIMIT,
) -> RadicalTable:
    """Build the kernel table for [1, x].

    Parameters
    ----------
    x : int
        Upper end of the table, 1 <= x <= max_limit.
    segment_size : int, optional
        Entries processed per pass (default ``DEFAULT_SEGMENT_SIZE``).
        Purely an engineering knob: any value >= 1 yields the same table.
    max_limit : int
        Budget guard; requests beyond it raise SieveLimitError.
    """
    if x < 1:
        raise ValueError(f"sieve limit must be >= 1, got {x}")
    if x > max_limit:
        raise SieveLimitError(f"sieve limit {x} exceeds the configured budget {max_limit}")
    seg = DEFAULT_SEGMENT_SIZE if segment_size is None else segment_size
    if seg < 1:
        raise ValueError(f"segment size must be >= 1, got {seg}")
    dtype = np.int32 if x <= np.iinfo(np.int32).max else np.int64
    small_primes = primes_up_to(math.isqrt(x))
    values = np.zeros(x + 1, dtype=dtype)
    for lo in range(1, x + 1, seg):
        hi = min(lo + seg - 1, x)
        values[lo : hi + 1] = _radical_segment(lo, hi, small_primes, dtype)
    return RadicalTable(x, values)
