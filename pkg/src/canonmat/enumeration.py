"""Counting and listing equivalence-class representatives.

Two routes are provided. :func:`count_canonical` walks every nondecreasing
tuple of pool masks and keeps the canonical ones; it is slow but simple and
serves as the reference. :func:`count_canonical_pruned` builds tuples row by
row and abandons a partial tuple as soon as it cannot be completed into a
canonical element.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Iterable, Sequence

from .bitcore import MaskPool, k_subset_masks
from .matrix import RowTuple, is_canonical

PRUNED_MAX_N = 12
BASELINE_MAX_VISITS = 10**9

#: Pruning rules of the row-by-row search, each independently switchable.
#: ``"sum"``: no column may exceed ``k`` ones. ``"need"``: a column must still
#: be able to reach ``k`` with the rows left. ``"order"``: once the top bits of
#: two adjacent columns differ, the left one must be the smaller.
RULES = frozenset({"sum", "need", "order"})


class SearchTooLarge(ValueError):
    """Raised when the baseline walk would visit too many tuples."""

    def __init__(self, visits: int, limit: int):
        super().__init__(f"baseline would visit {visits} tuples (limit {limit})")
        self.visits = visits
        self.limit = limit


class StopEnumeration(Exception):
    """Raise from a sink to end :func:`stream_representatives` early."""


@dataclass
class EnumerationReport:
    n: int
    k: int
    mu: int
    tuples_visited: int
    method: str
    elapsed: float

    def as_dict(self) -> dict:
        return asdict(self)


def _check_params(n: int, k: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in [1, {max_n}], got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def multiset_tuples(
    pool: Sequence[int], n: int, visitor: Callable[[RowTuple], object] | None = None
) -> int:
    """Visit every nondecreasing ``n``-tuple drawn from ``pool``.

    Tuples come in lexicographic order of their pool indices. Returns the
    number visited, ``C(len(pool) + n - 1, n)``.
    """
    if not pool or n < 1:
        raise ValueError("pool must be nonempty and n >= 1")
    count = 0
    for t in combinations_with_replacement(tuple(pool), n):
        if visitor is not None:
            visitor(t)
        count += 1
    return count


def predicted_visits(n: int, k: int) -> int:
    """Number of tuples the baseline walk examines for ``(n, k)``."""
    return comb(comb(n, k) + n - 1, n)


def count_canonical(
    n: int, k: int, force: bool = False, max_visits: int = BASELINE_MAX_VISITS
) -> EnumerationReport:
    """Count canonical elements by checking every nondecreasing tuple.

    Raises:
        SearchTooLarge: if more than ``max_visits`` tuples would be checked
            and ``force`` is not set.
    """
    _check_params(n, k, PRUNED_MAX_N)
    expected = predicted_visits(n, k)
    if expected > max_visits and not force:
        raise SearchTooLarge(expected, max_visits)
    start = time.perf_counter()
    mu = 0

    def visit(t):
        nonlocal mu
        if is_canonical(t, k):
            mu += 1

    visited = multiset_tuples(k_subset_masks(n, k), n, visit)
    return EnumerationReport(n, k, mu, visited, "baseline", time.perf_counter() - start)


def _search(
    pool: MaskPool,
    rules: frozenset,
    first: Iterable[int],
    emit: Callable[[RowTuple], None] | None = None,
) -> tuple[int, int]:
    """Depth-first search over rows; returns ``(mu, nodes)``.

    ``first`` restricts the pool indices tried for the top row, which is how
    the parallel mode splits work.
    """
    n, k = pool.n, pool.k
    masks = pool.masks
    c = len(masks)
    full_mask = (1 << n) - 1
    check_sum = "sum" in rules
    check_need = "need" in rules
    check_order = "order" in rules
    forced_last = check_sum and check_need
    rows = [0] * n
    mu = nodes = 0

    # levels[j] is the set of columns holding at least j ones so far; bit p
    # of ``tied`` means columns at bits p+1 and p agree on every placed row.
    def descend(depth, candidates, prev, levels, tied, broken):
        nonlocal mu, nodes
        full = levels[k]
        crit = 0
        if check_need:
            need = k - (n - depth - 1)
            if need >= 2 and full_mask & ~levels[need - 1]:
                return
            if need >= 1:
                crit = full_mask & ~levels[need]
        if depth == n - 1 and forced_last:
            # Every column is at k or k-1 here, and the row is pinned down.
            x = full_mask & ~full
            if x < prev:
                return
            bad = tied & (x >> 1) & ~x
            if bad and check_order:
                return
            nodes += 1
            if not (broken or bad):
                mu += 1
                if emit is not None:
                    rows[depth] = x
                    emit(tuple(rows))
            return
        for i in candidates:
            x = masks[i]
            if check_sum and x & full:
                continue
            if (x & crit) != crit:
                continue
            bad = tied & (x >> 1) & ~x
            if bad and check_order:
                continue
            nodes += 1
            nxt = [full_mask]
            for j in range(1, k + 2):
                nxt.append(levels[j] | (levels[j - 1] & x))
            if depth == n - 1:
                if nxt[k] == full_mask and not nxt[k + 1] and not (broken or bad):
                    mu += 1
                    if emit is not None:
                        rows[depth] = x
                        emit(tuple(rows))
                continue
            rows[depth] = x
            descend(
                depth + 1,
                range(i, c),
                x,
                nxt,
                tied & ~((x >> 1) ^ x),
                broken or bool(bad),
            )

    descend(0, first, 0, [full_mask] + [0] * (k + 1), full_mask >> 1, False)
    return mu, nodes


def _search_slice(args):
    n, k, rules, lo, hi = args
    return _search(k_subset_masks(n, k), rules, range(lo, hi))


def count_canonical_pruned(
    n: int, k: int, jobs: int = 1, rules: Iterable[str] = RULES
) -> EnumerationReport:
    """Count canonical elements with a pruned row-by-row search.

    ``tuples_visited`` counts the partial and complete tuples that survived
    pruning. With ``jobs > 1`` the top-row choices are split across worker
    processes; the result does not depend on ``jobs``. ``rules`` selects a
    subset of :data:`RULES` and exists to check that each rule is sound.
    """
    _check_params(n, k, PRUNED_MAX_N)
    rules = frozenset(rules)
    if not rules <= RULES:
        raise ValueError(f"unknown pruning rules: {sorted(rules - RULES)}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    start = time.perf_counter()
    pool = k_subset_masks(n, k)
    c = len(pool)
    if jobs == 1:
        mu, nodes = _search(pool, rules, range(c))
    else:
        # Early top rows carry far more work; interleaving would balance
        # better but single-index slices are simple and deterministic.
        tasks = [(n, k, rules, i, i + 1) for i in range(c)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_search_slice, tasks))
        mu = sum(p[0] for p in parts)
        nodes = sum(p[1] for p in parts)
    return EnumerationReport(n, k, mu, nodes, "pruned", time.perf_counter() - start)


def stream_representatives(n: int, k: int, sink: Callable[[RowTuple], object]) -> int:
    """Call ``sink`` on each canonical row tuple in lexicographic order.

    Returns the number of tuples delivered. A sink may raise
    :class:`StopEnumeration` to stop early.
    """
    _check_params(n, k, PRUNED_MAX_N)
    delivered = 0

    def emit(t):
        nonlocal delivered
        delivered += 1
        sink(t)

    pool = k_subset_masks(n, k)
    try:
        _search(pool, RULES, range(len(pool)), emit)
    except StopEnumeration:
        pass
    return delivered


def representatives(n: int, k: int) -> list[RowTuple]:
    """All canonical row tuples for ``(n, k)`` as a list."""
    out: list[RowTuple] = []
    stream_representatives(n, k, out.append)
    return out
