"""Brute-force ground truth for small n.

Everything here enumerates the full set of k-regular n x n matrices and
groups it into orbits under independent row and column permutations. It is
meant for cross-checking the fast routes, so it is deliberately naive and
capped at ``n <= 6``.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations

from .bitcore import k_subset_masks
from .enumeration import count_canonical_pruned
from .formulas import lambda_value
from .matrix import RowTuple, is_canonical

log = logging.getLogger(__name__)

ORACLE_MAX_N = 6


def _check(n: int, k: int) -> None:
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle handles 1 <= n <= {ORACLE_MAX_N}, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def enumerate_lambda_set(n: int, k: int) -> list[RowTuple]:
    """Every n x n matrix with k ones per row and column, as row tuples.

    Rows are placed top to bottom in any order; the output is sorted.
    """
    _check(n, k)
    pool = k_subset_masks(n, k).masks
    log.info("enumerating Lambda(%d, %d): at most %d row tuples", n, k, len(pool) ** n)
    out: list[RowTuple] = []
    counts = [0] * n
    rows: list[int] = []
    bits_of = {x: [b for b in range(n) if x >> b & 1] for x in pool}

    def place(depth):
        if depth == n:
            out.append(tuple(rows))
            return
        left = n - depth - 1
        for x in pool:
            bits = bits_of[x]
            if any(counts[b] == k for b in bits):
                continue
            for b in bits:
                counts[b] += 1
            # every column must still be able to reach k
            if all(k - c <= left for c in counts):
                rows.append(x)
                place(depth + 1)
                rows.pop()
            for b in bits:
                counts[b] -= 1

    place(0)
    out.sort()
    return out


def _swap_rows(t: RowTuple, i: int) -> RowTuple:
    return t[:i] + (t[i + 1], t[i]) + t[i + 2 :]


def _swap_columns(t: RowTuple, p: int) -> RowTuple:
    # exchange bits p and p + 1 in every row
    return tuple(x ^ (3 << p) if (x >> p ^ x >> (p + 1)) & 1 else x for x in t)


def orbit(t: RowTuple) -> set[RowTuple]:
    """All matrices reachable from ``t`` by permuting rows and columns.

    Breadth-first closure under adjacent row swaps and adjacent column swaps,
    which generate the whole group.
    """
    n = len(t)
    seen = {t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for i in range(n - 1):
            for nxt in (_swap_rows(cur, i), _swap_columns(cur, i)):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def _column_tables(n: int) -> list[list[int]]:
    tables = []
    for perm in permutations(range(n)):
        tables.append([sum(1 << perm[b] for b in range(n) if x >> b & 1) for x in range(1 << n)])
    return tables


def orbit_key(t: RowTuple, tables: list[list[int]] | None = None) -> RowTuple:
    """Lexicographically smallest row tuple in the orbit of ``t``.

    For a fixed column permutation the best row order is the sorted one, so
    only column permutations are searched.
    """
    if tables is None:
        tables = _column_tables(len(t))
    return min(tuple(sorted(tab[x] for x in t)) for tab in tables)


@dataclass
class OrbitPartition:
    n: int
    k: int
    classes: list[frozenset[RowTuple]]
    total: int

    def __len__(self) -> int:
        return len(self.classes)


def orbit_partition(n: int, k: int, method: str = "closure") -> OrbitPartition:
    """Split the full set into equivalence classes.

    ``method="closure"`` grows each class by generator closure;
    ``method="key"`` buckets members by :func:`orbit_key`. Classes are listed
    in order of their smallest member.
    """
    members = enumerate_lambda_set(n, k)
    classes: list[frozenset[RowTuple]] = []
    if method == "closure":
        assigned: set[RowTuple] = set()
        for t in members:
            if t in assigned:
                continue
            cls = frozenset(orbit(t))
            assigned |= cls
            classes.append(cls)
    elif method == "key":
        tables = _column_tables(n)
        buckets: dict[RowTuple, list[RowTuple]] = {}
        for t in members:
            buckets.setdefault(orbit_key(t, tables), []).append(t)
        classes = [frozenset(b) for b in buckets.values()]
        classes.sort(key=min)
    else:
        raise ValueError(f"unknown method {method!r}")
    return OrbitPartition(n, k, classes, sum(len(c) for c in classes))


@dataclass
class UniquenessReport:
    n: int
    k: int
    holds: bool
    canonical_members: list[list[RowTuple]]
    witnesses: list[tuple[int, list[RowTuple]]] = field(default_factory=list)


def verify_canonical_uniqueness(
    n: int, k: int, partition: OrbitPartition | None = None
) -> UniquenessReport:
    """Check that each class holds exactly one canonical element.

    Classes with zero or several canonical members are listed in
    ``witnesses`` as ``(class_index, canonical_members)``.
    """
    if partition is None:
        partition = orbit_partition(n, k)
    found = [sorted(t for t in cls if is_canonical(t, k)) for cls in partition.classes]
    witnesses = [(i, c) for i, c in enumerate(found) if len(c) != 1]
    return UniquenessReport(n, k, not witnesses, found, witnesses)


@dataclass
class CountsReport:
    n: int
    k: int
    lambda_oracle: int
    lambda_formula: int | None
    mu_oracle: int
    mu_enumeration: int

    @property
    def holds(self) -> bool:
        lam_ok = self.lambda_formula is None or self.lambda_formula == self.lambda_oracle
        return lam_ok and self.mu_oracle == self.mu_enumeration


def verify_counts(n: int, k: int, partition: OrbitPartition | None = None) -> CountsReport:
    """Compare oracle set size and class count with the formula and search."""
    if partition is None:
        partition = orbit_partition(n, k)
    formula = lambda_value(n, k) if k <= 3 else None
    return CountsReport(
        n,
        k,
        lambda_oracle=partition.total,
        lambda_formula=formula,
        mu_oracle=len(partition.classes),
        mu_enumeration=count_canonical_pruned(n, k).mu,
    )
