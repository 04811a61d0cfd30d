"""The eight counting families for colored integer partitions.

A colored partition assigns one of k colors to each position of a
nonincreasing part list.  Three independent restrictions generate eight
families: parts may be required distinct, the coloring may be required to
use every one of the k colors, and consecutive positions may be required
to carry different colors.

Each family count is computed two independent ways and cross-checked:

* the part-count sum: sum over m of t[n][m] * (number of admissible color
  words of length m), which stays in plain integers throughout; and
* generating-function expansion: an Euler-type product (with a rational
  prefactor for the adjacent-distinct families, applied exactly), with
  exactly-k counts obtained by signed binomial combination over smaller
  color sets.

The part-count sum is the canonical path; the series path exists to catch
mistakes in either.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import (
    BINOMIAL,
    RECIPROCAL,
    TruncatedSeries,
    euler_product,
    linear_combination,
    scale_exact,
)
from .tables import (
    DISTINCT,
    UNRESTRICTED,
    PartitionTable,
    binomial,
    build_distinct_table,
    build_partition_table,
)


@dataclass(frozen=True)
class FamilySpec:
    """Which family: three independent restriction flags."""

    distinct_parts: bool = False
    exact_colors: bool = False
    adjacent_distinct: bool = False


# Canonical short names, also the CLI tokens.  "edistinct" is the
# exactly-k-colored distinct-parts family without the adjacency rule; the
# bare "ed" token belongs to the exactly-k adjacent-distinct family.
FAMILIES: dict[str, FamilySpec] = {
    "cp": FamilySpec(False, False, False),
    "ep": FamilySpec(False, True, False),
    "d": FamilySpec(False, False, True),
    "ed": FamilySpec(False, True, True),
    "cd": FamilySpec(True, False, False),
    "edistinct": FamilySpec(True, True, False),
    "dd": FamilySpec(True, False, True),
    "edd": FamilySpec(True, True, True),
}

FAMILY_LABELS: dict[str, str] = {
    "cp": "k-colored partitions",
    "ep": "partitions colored with exactly k colors",
    "d": "k-colored partitions, adjacent parts colored differently",
    "ed": "exactly k colors, adjacent parts colored differently",
    "cd": "k-colored partitions into distinct parts",
    "edistinct": "distinct parts, exactly k colors",
    "dd": "distinct parts, adjacent parts colored differently",
    "edd": "distinct parts, exactly k colors, adjacent colored differently",
}

_TOKEN_OF = {flags: token for token, flags in FAMILIES.items()}


def family_token(family: FamilySpec) -> str:
    """Canonical short name for a FamilySpec."""
    return _TOKEN_OF[family]


@dataclass(frozen=True)
class SequenceRecord:
    """Computed counts for one family and color count, n = start_n.. ."""

    family: FamilySpec
    k: int
    values: tuple[int, ...]
    start_n: int = 1


class CrossCheckError(Exception):
    """The two closed-form paths disagreed; one of them has a bug."""

    def __init__(self, family: FamilySpec, k: int, n: int, msum: int, gf: int):
        super().__init__(
            f"family={family_token(family)} k={k} n={n}: "
            f"part-count sum gives {msum}, series expansion gives {gf}"
        )
        self.family = family
        self.k = k
        self.n = n


@lru_cache(maxsize=None)
def word_count(m: int, k: int, exact: bool, adjacent_distinct: bool) -> int:
    """Number of length-m color words over k colors satisfying the flags.

    Unrestricted: k^m.  Adjacent-distinct: k*(k-1)^(m-1).  The exact-k
    variants are inclusion-exclusion over the set of colors actually used;
    Python's 0**0 == 1 is load-bearing for the m = 1 terms.
    """
    if m < 1:
        raise ValueError(f"word length m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"color count k must be >= 1, got {k}")
    if not exact:
        if not adjacent_distinct:
            return k**m
        return k * (k - 1) ** (m - 1)
    if not adjacent_distinct:
        return sum((-1) ** j * binomial(k, j) * (k - j) ** m for j in range(k + 1))
    return sum(
        (-1) ** j * binomial(k, j) * (k - j) * (k - j - 1) ** (m - 1) for j in range(k)
    )


def _table_for(family: FamilySpec, n_max: int) -> PartitionTable:
    if family.distinct_parts:
        return build_distinct_table(n_max)
    return build_partition_table(n_max)


def count_msum(family: FamilySpec, k: int, n: int, table: PartitionTable) -> int:
    """Family count at n as a part-count sum: sum_m t[n][m] * word_count(m)."""
    wanted = DISTINCT if family.distinct_parts else UNRESTRICTED
    if table.kind != wanted:
        raise ValueError(f"family needs a {wanted} table, got {table.kind}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > table.max_n:
        raise IndexError(f"n={n} exceeds table max_n={table.max_n}")
    row = table.rows[n]
    exact, adjacent = family.exact_colors, family.adjacent_distinct
    total = 0
    for m in range(1, n + 1):
        t = row[m]
        if t:
            total += t * word_count(m, k, exact, adjacent)
    return total


def _base_series(c: int, n_max: int, kind: str, adjacent: bool) -> TruncatedSeries:
    """Series whose x^n coefficient (n >= 1) counts the non-exact family.

    For the adjacent-distinct families the closed form carries a prefactor
    c/(c-1), singular at c = 1; the c = 1 sequence is identically 1 for
    n >= 1 (only one-part partitions admit an adjacent-distinct coloring
    with a single color), so that series is substituted directly.
    """
    if not adjacent:
        return euler_product(c, n_max, kind)
    if c == 1:
        return TruncatedSeries((1,) * (n_max + 1))
    return scale_exact(euler_product(c - 1, n_max, kind), c, c - 1, start_index=1)


def count_gf(family: FamilySpec, k: int, n_max: int) -> SequenceRecord:
    """Whole sequence for n = 1..n_max by generating-function expansion.

    Exactly-k families are the signed binomial combination of the matching
    non-exact family over k-j colors, j = 0..k-1.  Constant terms are never
    read: the adjacent-distinct products only agree with the counts from
    x^1 on.
    """
    if k < 1:
        raise ValueError(f"color count k must be >= 1, got {k}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    kind = BINOMIAL if family.distinct_parts else RECIPROCAL
    if family.exact_colors:
        terms = [
            ((-1) ** j * binomial(k, j), _base_series(k - j, n_max, kind, family.adjacent_distinct))
            for j in range(k)
        ]
        s = linear_combination(terms)
    else:
        s = _base_series(k, n_max, kind, family.adjacent_distinct)
    return SequenceRecord(family, k, tuple(s.coeffs[1:]))


def sequence(
    family: FamilySpec,
    k: int,
    n_max: int,
    *,
    table: PartitionTable | None = None,
    verify: bool = False,
) -> SequenceRecord:
    """Canonical entry point: counts for n = 1..n_max via the part-count sum.

    With verify=True the series expansion is computed as well and any
    disagreement raises CrossCheckError naming the offending family, k, n.
    """
    if k < 1:
        raise ValueError(f"color count k must be >= 1, got {k}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if table is None:
        table = _table_for(family, n_max)
    values = tuple(count_msum(family, k, n, table) for n in range(1, n_max + 1))
    if verify:
        gf = count_gf(family, k, n_max)
        for i, (a, b) in enumerate(zip(values, gf.values)):
            if a != b:
                raise CrossCheckError(family, k, i + 1, a, b)
    return SequenceRecord(family, k, values)


def cross_check(
    family: FamilySpec, k: int, n_max: int, table: PartitionTable | None = None
) -> list[tuple[int, int, int]]:
    """Compare the two paths coefficient-by-coefficient.

    Returns (n, part-count value, series value) for every disagreement;
    an empty list means the paths agree everywhere up to n_max.
    """
    msum = sequence(family, k, n_max, table=table).values
    gf = count_gf(family, k, n_max).values
    return [(n, a, b) for n, (a, b) in enumerate(zip(msum, gf), start=1) if a != b]


def identity_failures(
    k_max: int, n_max: int, zero_prefix_k_max: int | None = None
) -> list[str]:
    """Check the cross-family identities; returns one line per violation.

    Checked, all exactly:
    * counting colorings by their used-color subset: total_k(n) equals
      sum_j C(k,j) * exact_j(n), for each of the four total/exact pairs;
    * prefactor identity (k-1)*adjacent_k(n) = k*total_{k-1}(n), stated
      multiplicatively so it is integer-only, plus the divisibility of
      total_{k-1}(n) by k-1 that makes the rational form exact;
    * zero prefixes for the exactly-k families (up to zero_prefix_k_max,
      default k_max + 1): no value before n = k, or n = k(k+1)/2 when
      parts are distinct;
    * single-color adjacent-distinct sequences are identically 1.
    """
    if zero_prefix_k_max is None:
        zero_prefix_k_max = k_max + 1
    k_top = max(k_max, zero_prefix_k_max)
    failures: list[str] = []

    seqs: dict[tuple[str, int], tuple[int, ...]] = {}
    for token, family in FAMILIES.items():
        table = _table_for(family, n_max)
        for k in range(1, k_top + 1):
            seqs[(token, k)] = sequence(family, k, n_max, table=table).values

    pairs = [("cp", "ep"), ("cd", "edistinct"), ("d", "ed"), ("dd", "edd")]
    for total_tok, exact_tok in pairs:
        for k in range(1, k_max + 1):
            for i in range(n_max):
                lhs = seqs[(total_tok, k)][i]
                rhs = sum(binomial(k, j) * seqs[(exact_tok, j)][i] for j in range(1, k + 1))
                if lhs != rhs:
                    failures.append(
                        f"subset identity {total_tok}/{exact_tok} k={k} n={i + 1}: "
                        f"{lhs} != {rhs}"
                    )

    for adj_tok, total_tok in [("d", "cp"), ("dd", "cd")]:
        for k in range(2, k_max + 1):
            for i in range(n_max):
                lhs = (k - 1) * seqs[(adj_tok, k)][i]
                rhs = k * seqs[(total_tok, k - 1)][i]
                if lhs != rhs:
                    failures.append(
                        f"prefactor identity {adj_tok} k={k} n={i + 1}: {lhs} != {rhs}"
                    )
                if seqs[(total_tok, k - 1)][i] % (k - 1):
                    failures.append(
                        f"divisibility {total_tok} k={k - 1} n={i + 1}: "
                        f"{seqs[(total_tok, k - 1)][i]} not divisible by {k - 1}"
                    )

    for token, family in FAMILIES.items():
        if not family.exact_colors:
            continue
        for k in range(1, zero_prefix_k_max + 1):
            first = k * (k + 1) // 2 if family.distinct_parts else k
            for i in range(min(first - 1, n_max)):
                if seqs[(token, k)][i] != 0:
                    failures.append(
                        f"zero prefix {token} k={k} n={i + 1}: "
                        f"expected 0, got {seqs[(token, k)][i]}"
                    )

    for token in ("d", "dd"):
        if any(v != 1 for v in seqs[(token, 1)]):
            failures.append(f"single-color {token} sequence is not identically 1")

    return failures
