"""Bit-level primitives on matrix rows stored as unsigned integers.

A row of an ``n``-column binary matrix is an integer below ``2**n``. Bits are
numbered right to left starting at 0, so bit ``n - 1`` is the leftmost
column and bit 0 the rightmost.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

MAX_WIDTH = 62


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {n}")


def _check_mask(x: int) -> None:
    if x < 0:
        raise ValueError(f"masks are nonnegative, got {x}")


def popcount(x: int) -> int:
    """Number of set bits in ``x``."""
    _check_mask(x)
    return x.bit_count()


def bit_value(x: int, i: int, width: int = MAX_WIDTH) -> int:
    """Return bit ``i`` of ``x`` as 0 or 1.

    Raises:
        ValueError: if ``i`` lies outside ``[0, width)``.
    """
    _check_mask(x)
    if not 0 <= i < width:
        raise ValueError(f"bit index {i} outside width {width}")
    return 1 if x & (1 << i) else 0


def to_binary_string(x: int, width: int) -> str:
    """Fixed-width binary text of ``x``, most significant bit first.

    >>> to_binary_string(5, 4)
    '0101'
    """
    _check_mask(x)
    if x >> width:
        raise ValueError(f"{x} does not fit in {width} bits")
    return format(x, f"0{width}b")


@dataclass(frozen=True)
class MaskPool:
    """All ``n``-bit masks with exactly ``k`` ones, ascending."""

    n: int
    k: int
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __getitem__(self, i: int) -> int:
        return self.masks[i]


@lru_cache(maxsize=None)
def _data_numb(n: int, k: int) -> tuple[int, ...]:
    # Masks of length n either have the top bit clear (the n-1, k pool) or
    # set (the n-1, k-1 pool with bit n-1 or'ed in). The first group is
    # entirely smaller, so concatenation keeps the result sorted.
    if k == 0:
        return (0,)
    if k == n:
        return ((1 << k) - 1,)
    top = 1 << (n - 1)
    return _data_numb(n - 1, k) + tuple(m | top for m in _data_numb(n - 1, k - 1))


def k_subset_masks(n: int, k: int) -> MaskPool:
    """Build the sorted pool of ``n``-bit masks of popcount ``k``.

    The masks are produced directly by splitting on the top bit, without
    scanning all ``2**n`` integers.

    >>> list(k_subset_masks(4, 2))
    [3, 5, 6, 9, 10, 12]
    """
    _check_width(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return MaskPool(n, k, _data_numb(n, k))
