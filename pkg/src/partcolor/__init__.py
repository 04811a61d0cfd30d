"""Exact counting of colored integer partitions.

Eight families (distinct parts or not, exactly k colors or at most,
adjacent colors distinct or free), each computed by two independent
closed-form paths plus a brute-force enumeration oracle, with OEIS b-file
comparison for the rows that have known identifications.
"""

from .families import (
    FAMILIES,
    FAMILY_LABELS,
    CrossCheckError,
    FamilySpec,
    SequenceRecord,
    count_gf,
    count_msum,
    cross_check,
    family_token,
    identity_failures,
    sequence,
    word_count,
)
from .oracle import ColoredPartition, OracleBudgetError, brute_count, iter_colored
from .series import TruncatedSeries, euler_product
from .tables import PartitionTable, binomial, build_distinct_table, build_partition_table

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "FAMILY_LABELS",
    "ColoredPartition",
    "CrossCheckError",
    "FamilySpec",
    "OracleBudgetError",
    "PartitionTable",
    "SequenceRecord",
    "TruncatedSeries",
    "binomial",
    "brute_count",
    "build_distinct_table",
    "build_partition_table",
    "count_gf",
    "count_msum",
    "cross_check",
    "euler_product",
    "family_token",
    "identity_failures",
    "iter_colored",
    "sequence",
    "word_count",
    "__version__",
]
