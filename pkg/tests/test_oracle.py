from math import factorial

import pytest

from canonmat.enumeration import count_canonical, count_canonical_pruned
from canonmat.matrix import is_member
from canonmat.oracle import (
    _swap_columns,
    _swap_rows,
    enumerate_lambda_set,
    orbit,
    orbit_key,
    orbit_partition,
    verify_canonical_uniqueness,
    verify_counts,
)


def partitions_min_part_two(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(partitions_min_part_two(n - p, p) for p in range(2, min(n, largest) + 1))


def test_enumerate_examples():
    assert enumerate_lambda_set(2, 1) == [(1, 2), (2, 1)]
    assert enumerate_lambda_set(3, 3) == [(7, 7, 7)]
    assert len(enumerate_lambda_set(4, 2)) == 90


def test_enumerate_members_are_valid_and_distinct():
    for n in range(1, 6):
        for k in range(1, n + 1):
            members = enumerate_lambda_set(n, k)
            assert len(set(members)) == len(members)
            assert all(is_member(t, k) for t in members)


@pytest.mark.parametrize("n, k", [(7, 2), (0, 1), (3, 4)])
def test_enumerate_range(n, k):
    with pytest.raises(ValueError):
        enumerate_lambda_set(n, k)


def test_partition_examples():
    assert len(orbit_partition(4, 2)) == 2
    part = orbit_partition(3, 1)
    assert len(part) == 1 and part.total == 6


def test_two_regular_classes_follow_cycle_types():
    # a 2-regular class is fixed by the lengths of its bipartite cycles,
    # i.e. a partition of n into parts >= 2
    for n in range(2, 7):
        assert len(orbit_partition(n, 2)) == partitions_min_part_two(n)


def test_classes_cover_and_are_closed():
    for n in range(1, 5):
        for k in range(1, n + 1):
            part = orbit_partition(n, k)
            members = enumerate_lambda_set(n, k)
            assert part.total == len(members)
            assert set().union(*part.classes) == set(members)
            for cls in part.classes:
                for t in cls:
                    for i in range(n - 1):
                        assert _swap_rows(t, i) in cls
                        assert _swap_columns(t, i) in cls


def test_orbit_sizes_divide_group_order():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for cls in orbit_partition(n, k).classes:
                assert factorial(n) ** 2 % len(cls) == 0


def test_closure_and_key_bucketing_agree():
    for n in range(1, 6):
        for k in range(1, n + 1):
            a = orbit_partition(n, k, "closure").classes
            b = orbit_partition(n, k, "key").classes
            assert a == b


def test_orbit_key_is_orbit_minimum():
    t = (3, 5, 10, 20, 24)
    assert orbit_key(t) == min(orbit(t))


def test_uniqueness_examples():
    report = verify_canonical_uniqueness(4, 2)
    assert report.holds and [len(c) for c in report.canonical_members] == [1, 1]
    assert verify_canonical_uniqueness(2, 1).canonical_members == [[(1, 2)]]
    assert verify_canonical_uniqueness(3, 3).holds


def test_uniqueness_holds_where_it_does():
    ok = [(n, k) for n in range(1, 5) for k in range(1, n + 1)]
    ok += [(5, 1), (5, 4), (5, 5), (6, 1), (6, 5), (6, 6)]
    for n, k in ok:
        assert verify_canonical_uniqueness(n, k).holds, (n, k)


def test_uniqueness_counterexample_n5_k2():
    report = verify_canonical_uniqueness(5, 2)
    assert not report.holds
    assert report.witnesses == [
        (0, [(3, 3, 12, 20, 24), (3, 5, 6, 24, 24), (3, 12, 12, 17, 18)]),
        (1, [(3, 5, 10, 20, 24), (3, 5, 12, 18, 24)]),
    ]


def test_every_class_has_a_canonical_member():
    # so the canonical count bounds the class count from above
    cases = [(n, k) for n in range(1, 6) for k in range(1, n + 1)] + [(6, 2)]
    for n, k in cases:
        report = verify_canonical_uniqueness(n, k)
        assert all(report.canonical_members)
        assert sum(map(len, report.canonical_members)) == count_canonical(n, k).mu


@pytest.mark.parametrize(
    "n, k, lam, mu_oracle, mu_enum",
    [(4, 2, 90, 2, 2), (4, 1, 24, 1, 1), (5, 2, 2040, 2, 5), (5, 3, 2040, 2, 3)],
)
def test_verify_counts(n, k, lam, mu_oracle, mu_enum):
    r = verify_counts(n, k)
    assert (r.lambda_oracle, r.lambda_formula) == (lam, lam)
    assert (r.mu_oracle, r.mu_enumeration) == (mu_oracle, mu_enum)
    assert r.holds == (mu_oracle == mu_enum)


def test_verify_counts_without_formula():
    r = verify_counts(5, 4)
    assert r.lambda_formula is None and r.lambda_oracle == 120 and r.holds
    assert r.mu_enumeration == count_canonical_pruned(5, 4).mu


def test_counterexample_by_all_permutation_pairs():
    # independent of the closure code: try every (row perm, column perm)
    from itertools import permutations

    from canonmat.enumeration import representatives
    from canonmat.matrix import to_array

    def key(rows):
        a = to_array(rows)
        perms = [list(p) for p in permutations(range(len(rows)))]
        return min(a[p][:, q].tobytes() for p in perms for q in perms)

    reps = representatives(5, 2)
    assert len(reps) == 5
    assert len({key(t) for t in reps}) == 2
