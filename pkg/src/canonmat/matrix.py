"""Square binary matrices as tuples of row integers.

A matrix ``A`` with ``n`` rows maps to ``(x_1, ..., x_n)`` where ``x_i`` is
row ``i`` read as a binary number, leftmost column most significant. The
column tuple ``(y_1, ..., y_n)`` reads column ``m`` top to bottom with the
top row most significant; it is the row tuple of the transpose.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .bitcore import MAX_WIDTH, to_binary_string

RowTuple = tuple[int, ...]


def _validate(rows: Sequence[int]) -> int:
    n = len(rows)
    if not 1 <= n <= MAX_WIDTH:
        raise ValueError(f"dimension must be in [1, {MAX_WIDTH}], got {n}")
    for x in rows:
        if x < 0 or x >> n:
            raise ValueError(f"row {x} is not an {n}-bit mask")
    return n


def transpose(rows: Sequence[int]) -> RowTuple:
    """Row tuple of the transposed matrix.

    Column ``m`` (1-based, left to right) is bit ``n - m`` of every row, and
    row ``i`` lands on bit ``n - i`` of the column value.

    >>> transpose((3, 0))
    (2, 2)
    """
    n = _validate(rows)
    cols = []
    for j in range(n - 1, -1, -1):
        y = 0
        for x in rows:
            y = (y << 1) | ((x >> j) & 1)
        cols.append(y)
    return tuple(cols)


columns = transpose


def is_member(rows: Sequence[int], k: int) -> bool:
    """True if every row and every column has exactly ``k`` ones."""
    _validate(rows)
    return all(x.bit_count() == k for x in rows) and all(
        y.bit_count() == k for y in transpose(rows)
    )


def is_canonical(rows: Sequence[int], k: int) -> bool:
    """Check the sorted-rows, sorted-columns representative condition.

    Rows must be nondecreasing, columns ``y_1 <= ... <= y_n`` nondecreasing
    and every column must hold ``k`` ones. Row popcounts are the caller's
    responsibility; rows normally come from a :class:`MaskPool`.
    """
    n = _validate(rows)
    if any(rows[i] > rows[i + 1] for i in range(n - 1)):
        return False
    prev = 0
    for j in range(n - 1, -1, -1):
        y = 0
        for x in rows:
            y = (y << 1) | ((x >> j) & 1)
        if y < prev or y.bit_count() != k:
            return False
        prev = y
    return True


def render(rows: Sequence[int]) -> str:
    """One line of ``0``/``1`` characters per row."""
    n = _validate(rows)
    return "".join(to_binary_string(x, n) + "\n" for x in rows)


def to_array(rows: Sequence[int]) -> np.ndarray:
    """Expand a row tuple into an ``n x n`` uint8 array."""
    n = _validate(rows)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    packed = np.asarray(rows, dtype=np.uint64)[:, None]
    return ((packed >> shifts) & np.uint64(1)).astype(np.uint8)


def from_array(a) -> RowTuple:
    """Pack a square 0/1 array into its row tuple."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isin(a, (0, 1)).all():
        raise ValueError("entries must be 0 or 1")
    rows = tuple(int("".join(map(str, r)), 2) for r in a.astype(int).tolist())
    _validate(rows)
    return rows
