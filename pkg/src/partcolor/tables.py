"""Triangular tables of partition counts by number of parts.

P(n, m) counts partitions of n into exactly m parts, d(n, m) the same with
all parts distinct.  Both triangles are built bottom-up once and reused;
entries are Python ints so downstream color-word multipliers never hit a
width limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

UNRESTRICTED = "unrestricted"
DISTINCT = "distinct"


@dataclass(frozen=True)
class PartitionTable:
    """Triangle t[n][m] for 0 <= m <= n <= max_n."""

    kind: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def count(self, n: int, m: int) -> int:
        """t[n][m]; m > n is 0 by convention."""
        if not 0 <= n <= self.max_n:
            raise IndexError(f"n={n} out of range 0..{self.max_n}")
        if m < 0:
            raise IndexError(f"m={m} must be >= 0")
        if m > n:
            return 0
        return self.rows[n][m]


@lru_cache(maxsize=32)
def build_partition_table(max_n: int) -> PartitionTable:
    """Counts of partitions of n into exactly m parts.

    P(n, m) = P(n-1, m-1) + P(n-m, m): a partition either contains a part
    equal to 1 (remove it) or has every part >= 2 (lower each by 1).
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    rows = [[0] * (n + 1) for n in range(max_n + 1)]
    rows[0][0] = 1
    for n in range(1, max_n + 1):
        row = rows[n]
        for m in range(1, n + 1):
            v = rows[n - 1][m - 1]
            if m <= n - m:
                v += rows[n - m][m]
            row[m] = v
    return PartitionTable(UNRESTRICTED, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=32)
def build_distinct_table(max_n: int) -> PartitionTable:
    """Counts of partitions of n into exactly m distinct parts.

    d(n, m) = d(n-m, m) + d(n-m, m-1): lowering each of the m parts by 1
    either keeps m distinct parts or drops a part that was equal to 1.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    rows = [[0] * (n + 1) for n in range(max_n + 1)]
    rows[0][0] = 1
    for n in range(1, max_n + 1):
        row = rows[n]
        for m in range(1, n + 1):
            rest = n - m
            v = rows[rest][m] if m <= rest else 0
            if m - 1 <= rest:
                v += rows[rest][m - 1]
            row[m] = v
    return PartitionTable(DISTINCT, tuple(tuple(r) for r in rows))


def partition_count(n: int, table: PartitionTable) -> int:
    """Total partitions of n, summed over the number of parts."""
    if table.kind != UNRESTRICTED:
        raise ValueError(f"partition_count needs an {UNRESTRICTED} table, got {table.kind}")
    if not 0 <= n <= table.max_n:
        raise IndexError(f"n={n} out of range 0..{table.max_n}")
    return sum(table.rows[n])


def binomial(k: int, j: int) -> int:
    """C(k, j); j > k is 0 by convention, negative arguments are rejected."""
    return math.comb(k, j)
