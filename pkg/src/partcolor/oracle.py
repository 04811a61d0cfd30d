"""Brute-force ground truth by exhaustive enumeration.

Every partition of n is generated explicitly, every color word over its
positions is tried, and the survivors are counted one by one.  Nothing
here shares a formula with the closed-form paths it judges, and there is
deliberately no memoization: slow and dumb is the point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .families import FamilySpec
from .tables import build_distinct_table, build_partition_table

DEFAULT_BUDGET = 10**9

# Beyond this the number of partitions alone dwarfs any budget an exhaustive
# enumeration could honor, and sizing the guard triangle stops being free.
_MAX_ORACLE_N = 5000


class OracleBudgetError(Exception):
    """Enumeration refused: the candidate-word count exceeds the budget."""


@dataclass(frozen=True)
class ColoredPartition:
    """Nonincreasing parts plus one color per position, colors in 1..k."""

    parts: tuple[int, ...]
    colors: tuple[int, ...]


def enumerate_partitions(n: int, distinct: bool = False) -> list[tuple[int, ...]]:
    """All nonincreasing part lists summing to n, each exactly once.

    Strictly decreasing lists when distinct is set.  Order is deterministic:
    largest first part first, then recursively the same, so for n = 4 the
    output is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def descend(remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            descend(remaining - part, part - 1 if distinct else part)
            prefix.pop()

    descend(n, n)
    return out


def _word_ok(word: tuple[int, ...], k: int, exact: bool, adjacent: bool) -> bool:
    if adjacent:
        prev = word[0]
        for c in word[1:]:
            if c == prev:
                return False
            prev = c
    return not exact or len(set(word)) == k


def candidate_words(family: FamilySpec, k: int, n: int) -> int:
    """How many (partition, color word) candidates enumeration would visit."""
    build = build_distinct_table if family.distinct_parts else build_partition_table
    table = build(n)
    row = table.rows[n]
    return sum(row[m] * k**m for m in range(1, n + 1))


def iter_colored(family: FamilySpec, k: int, n: int) -> Iterator[ColoredPartition]:
    """Yield every colored partition of n admitted by the family flags.

    Colorings are words over positions of the sorted part list: equal parts
    with their colors swapped are distinct colored partitions.
    """
    if k < 1:
        raise ValueError(f"color count k must be >= 1, got {k}")
    exact, adjacent = family.exact_colors, family.adjacent_distinct
    for parts in enumerate_partitions(n, family.distinct_parts):
        for word in itertools.product(range(1, k + 1), repeat=len(parts)):
            if _word_ok(word, k, exact, adjacent):
                yield ColoredPartition(parts, word)


def brute_count(family: FamilySpec, k: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count colored partitions of n by exhaustive enumeration.

    Refuses with OracleBudgetError when the total number of candidate words
    exceeds the budget, instead of silently grinding.
    """
    if k < 1:
        raise ValueError(f"color count k must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > _MAX_ORACLE_N:
        raise OracleBudgetError(
            f"oracle out of budget: n={n} exceeds the enumeration ceiling {_MAX_ORACLE_N}"
        )
    total = candidate_words(family, k, n)
    if total > budget:
        raise OracleBudgetError(
            f"oracle out of budget: {total} candidate words > budget {budget}"
        )

    exact, adjacent = family.exact_colors, family.adjacent_distinct
    colors = range(1, k + 1)
    count = 0
    # Specialized loops keep the hot word scan free of per-word flag checks;
    # iter_colored is the generic reference these are tested against.
    for parts in enumerate_partitions(n, family.distinct_parts):
        words = itertools.product(colors, repeat=len(parts))
        if not exact and not adjacent:
            count += sum(1 for _ in words)
        elif exact and not adjacent:
            for w in words:
                if len(set(w)) == k:
                    count += 1
        elif adjacent and not exact:
            for w in words:
                prev = w[0]
                for c in w[1:]:
                    if c == prev:
                        break
                    prev = c
                else:
                    count += 1
        else:
            for w in words:
                if len(set(w)) != k:
                    continue
                prev = w[0]
                for c in w[1:]:
                    if c == prev:
                        break
                    prev = c
                else:
                    count += 1
    return count
