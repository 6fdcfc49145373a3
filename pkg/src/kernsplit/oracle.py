"""Exhaustive decomposition search and representability probes.

The quality of a part m is the exact rational k(m)**2 / m: at most 1
exactly when k(m) <= sqrt(m), and the squared ratio of kernel to square
root in general.  A pair is ranked by its worse (larger) part, so the
best decomposition of n minimizes max(quality(m1), quality(m2)) over
all m1 + m2 = n with m1, m2 >= 2, ties resolved toward the smallest m1.

Ranking is exact rational comparison throughout; floats only prefilter
which pairs can possibly attain the minimum, and every surviving
candidate is re-ranked with ``fractions.Fraction``.

Range scans are quadratic in the upper end (O(n) kernel lookups per n
once the table is built), so anything past ``ORACLE_RANGE_LIMIT``
requires an explicit ``allow_large=True``.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decompose import Decomposition, split
from .kernel import RadicalTable, radical_sieve
from .powered import log_weighted_mask

__all__ = [
    "ORACLE_RANGE_LIMIT",
    "BestSplit",
    "ComparisonReport",
    "ComparisonRow",
    "ProbeReport",
    "best_decomposition",
    "conjecture_probe",
    "constructive_vs_oracle",
    "decomposition_quality",
    "part_quality",
]

ORACLE_RANGE_LIMIT = 100_000

# relative slack for the float prefilter; anything this close to the
# float minimum is re-ranked exactly
_PREFILTER_REL = 1e-6


@dataclass(frozen=True, slots=True)
class BestSplit:
    """Minimizer of the pairwise quality for one n, with 2 <= m1 <= m2."""

    n: int
    m1: int
    m2: int
    quality: Fraction

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "m1": self.m1,
            "m2": self.m2,
            "quality": str(self.quality),
        }


def part_quality(m: int, k: int) -> Fraction:
    """Exact quality k**2 / m of a single part."""
    return Fraction(k * k, m)


def decomposition_quality(d: Decomposition, table: RadicalTable) -> Fraction:
    """Worse part quality of a decomposition, kernels from the table."""
    return max(
        part_quality(d.m1, table[d.m1]),
        part_quality(d.m2, table[d.m2]),
    )


def best_decomposition(n: int, *, table: RadicalTable | None = None) -> BestSplit:
    """Exhaustive minimum of max(quality(m1), quality(m2)) over m1 + m2 = n."""
    if n < 4:
        raise ValueError(f"no two-part decompositions below 4, got {n}")
    if table is None:
        table = radical_sieve(n - 2)
    elif table.limit < n - 2:
        raise ValueError(f"table limit {table.limit} is below n-2={n - 2}")
    m1 = np.arange(2, n // 2 + 1, dtype=np.int64)
    m2 = n - m1
    k1 = table.values[m1].astype(np.int64)
    k2 = table.values[m2].astype(np.int64)
    q1 = k1.astype(np.float64) ** 2 / m1
    q2 = k2.astype(np.float64) ** 2 / m2
    qmax = np.maximum(q1, q2)
    fmin = float(qmax.min())
    cand = np.nonzero(qmax <= fmin * (1 + _PREFILTER_REL) + 1e-12)[0]
    best_q: Fraction | None = None
    best_i = -1
    for i in cand:  # ascending m1, so strict < keeps the smallest m1 on ties
        q = max(
            part_quality(int(m1[i]), int(k1[i])),
            part_quality(int(m2[i]), int(k2[i])),
        )
        if best_q is None or q < best_q:
            best_q, best_i = q, int(i)
    return BestSplit(n, int(m1[best_i]), int(m2[best_i]), best_q)


@dataclass(frozen=True, slots=True)
class ComparisonRow:
    n: int
    split_m1: int
    split_m2: int
    split_quality: Fraction
    split_fallback: bool
    oracle_m1: int
    oracle_m2: int
    oracle_quality: Fraction

    @property
    def ok(self) -> bool:
        return self.oracle_quality <= self.split_quality

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "split_m1": self.split_m1,
            "split_m2": self.split_m2,
            "split_quality": str(self.split_quality),
            "split_fallback": self.split_fallback,
            "oracle_m1": self.oracle_m1,
            "oracle_m2": self.oracle_m2,
            "oracle_quality": str(self.oracle_quality),
            "ok": self.ok,
        }


@dataclass(frozen=True, slots=True)
class ComparisonReport:
    """Constructive split vs exhaustive optimum over [n_lo, n_hi]."""

    n_lo: int
    n_hi: int
    rows: tuple[ComparisonRow, ...]
    violations: tuple[int, ...]
    max_split_quality: Fraction
    mean_split_quality: float
    max_oracle_quality: Fraction
    mean_oracle_quality: float

    def to_rows(self) -> list[dict]:
        return [row.to_record() for row in self.rows]

    def summary_record(self) -> dict:
        return {
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "checked": len(self.rows),
            "violations": len(self.violations),
            "max_split_quality": str(self.max_split_quality),
            "mean_split_quality": self.mean_split_quality,
            "max_oracle_quality": str(self.max_oracle_quality),
            "mean_oracle_quality": self.mean_oracle_quality,
        }


def _check_range(n_lo: int, n_hi: int, allow_large: bool) -> None:
    if not 4 <= n_lo <= n_hi:
        raise ValueError(f"need 4 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    if n_hi > ORACLE_RANGE_LIMIT and not allow_large:
        raise ValueError(
            f"range end {n_hi} exceeds {ORACLE_RANGE_LIMIT}; "
            "pass allow_large=True to accept the quadratic cost"
        )


def constructive_vs_oracle(
    n_lo: int,
    n_hi: int,
    *,
    table: RadicalTable | None = None,
    allow_large: bool = False,
) -> ComparisonReport:
    """Compare split(n) against the exhaustive optimum for each n.

    The oracle can never be worse than the constructive split; any n
    where it is lands in ``violations``.
    """
    _check_range(n_lo, n_hi, allow_large)
    if table is None:
        table = radical_sieve(n_hi)
    rows = []
    violations = []
    sum_split = 0.0
    sum_oracle = 0.0
    for n in range(n_lo, n_hi + 1):
        d = split(n)
        sq = decomposition_quality(d, table)
        best = best_decomposition(n, table=table)
        row = ComparisonRow(
            n=n,
            split_m1=d.m1,
            split_m2=d.m2,
            split_quality=sq,
            split_fallback=d.fallback,
            oracle_m1=best.m1,
            oracle_m2=best.m2,
            oracle_quality=best.quality,
        )
        rows.append(row)
        if not row.ok:
            violations.append(n)
        sum_split += float(sq)
        sum_oracle += float(best.quality)
    count = len(rows)
    return ComparisonReport(
        n_lo=n_lo,
        n_hi=n_hi,
        rows=tuple(rows),
        violations=tuple(violations),
        max_split_quality=max(r.split_quality for r in rows),
        mean_split_quality=sum_split / count,
        max_oracle_quality=max(r.oracle_quality for r in rows),
        mean_oracle_quality=sum_oracle / count,
    )


@dataclass(frozen=True, slots=True)
class ProbeReport:
    """Which n in [n_lo, n_hi] split into two log-weighted members.

    A part m qualifies when k(m)**2 <= m * ln(m)**(2*gamma); n is
    representable when some m1 + m2 = n (m1 <= m2, both >= 2) has both
    parts qualifying.  ``pairs`` holds the smallest qualifying m1 per n,
    or None where none exists; those n are listed in ``failing``.  No
    cutoff beyond which everything is representable is asserted, only
    observed.
    """

    n_lo: int
    n_hi: int
    gamma: float
    pairs: tuple[tuple[int, int | None], ...]
    failing: tuple[int, ...]

    @property
    def satisfied(self) -> int:
        return len(self.pairs) - len(self.failing)

    def to_rows(self) -> list[dict]:
        return [
            {
                "n": n,
                "ok": m1 is not None,
                "m1": m1,
                "m2": n - m1 if m1 is not None else None,
            }
            for n, m1 in self.pairs
        ]

    def summary_record(self) -> dict:
        return {
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "gamma": self.gamma,
            "checked": len(self.pairs),
            "satisfied": self.satisfied,
            "failing": list(self.failing),
        }


def conjecture_probe(
    n_lo: int,
    n_hi: int,
    gamma: float,
    *,
    table: RadicalTable | None = None,
    allow_large: bool = False,
) -> ProbeReport:
    """Scan [n_lo, n_hi] for two-part log-weighted representations."""
    _check_range(n_lo, n_hi, allow_large)
    if table is None:
        table = radical_sieve(n_hi - 2)
    good = log_weighted_mask(n_hi - 2, gamma, table=table)
    pairs = []
    failing = []
    for n in range(n_lo, n_hi + 1):
        half = n // 2
        left = good[2 : half + 1]
        right = good[n - 2 : n - half - 1 : -1]  # good[n - m1], m1 ascending
        hits = left & right
        if hits.any():
            m1 = 2 + int(hits.argmax())
            pairs.append((n, m1))
        else:
            pairs.append((n, None))
            failing.append(n)
    return ProbeReport(
        n_lo=n_lo,
        n_hi=n_hi,
        gamma=gamma,
        pairs=tuple(pairs),
        failing=tuple(failing),
    )
