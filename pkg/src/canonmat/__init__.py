"""Canonical representatives of square binary matrices with k ones in every
row and column, plus exact counting formulas and a brute-force oracle."""
from .bitcore import MaskPool, bit_value, k_subset_masks, popcount, to_binary_string
from .enumeration import (
    EnumerationReport,
    StopEnumeration,
    count_canonical,
    count_canonical_pruned,
    multiset_tuples,
    representatives,
    stream_representatives,
)
from .formulas import lambda_value
from .matrix import from_array, is_canonical, is_member, render, to_array, transpose

__all__ = [
    "EnumerationReport",
    "MaskPool",
    "StopEnumeration",
    "bit_value",
    "count_canonical",
    "count_canonical_pruned",
    "from_array",
    "is_canonical",
    "is_member",
    "k_subset_masks",
    "lambda_value",
    "multiset_tuples",
    "popcount",
    "render",
    "representatives",
    "stream_representatives",
    "to_array",
    "to_binary_string",
    "transpose",
]

__version__ = "0.1.0"
