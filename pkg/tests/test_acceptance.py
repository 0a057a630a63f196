"""Exit criteria. Run with ``pytest tests/test_acceptance.py``; a summary line
per criterion is printed at the end. ``-m "not slow"`` skips the n = 9 row."""
import csv
import io
import time
from math import comb

import pytest

from canonmat import formulas
from canonmat.bitcore import k_subset_masks
from canonmat.cli import main
from canonmat.enumeration import count_canonical, count_canonical_pruned
from canonmat.oracle import enumerate_lambda_set

# mu(n, k) as published, keyed by (n, k)
PUBLISHED = {
    (2, 1): 1, (3, 1): 1, (4, 1): 1, (5, 1): 1, (6, 1): 1, (7, 1): 1, (8, 1): 1, (9, 1): 1,
    (3, 2): 1, (4, 2): 2, (5, 2): 5, (6, 2): 13, (7, 2): 42, (8, 2): 155, (9, 2): 636,
    (4, 3): 1, (5, 3): 3, (6, 3): 25, (7, 3): 272, (8, 3): 4070, (9, 3): 79221,
    (5, 4): 1, (6, 4): 5, (7, 4): 161, (8, 4): 7776, (9, 4): 626649,
    (6, 5): 1, (7, 5): 8, (8, 5): 1112, (9, 5): 287311,
    (7, 6): 1, (8, 6): 13, (9, 6): 8787,
    (8, 7): 1, (9, 7): 21,
    (9, 8): 1,
}


def _clear_formula_caches():
    for fn in (
        formulas.lambda_n_2_partition_sum,
        formulas.lambda_n_2_anand,
        formulas.lambda_n_2_good_crook,
        formulas._lambda2_pi_tables,
        formulas.lambda_n_3,
    ):
        fn.cache_clear()


@pytest.mark.criterion(1, "table --max-n 7 equals published mu, under 120 s")
def test_criterion_1_table_up_to_7(capsys):
    start = time.perf_counter()
    code = main(["table", "--max-n", "7", "--format", "csv"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    got = {(int(r["n"]), int(r["k"])): int(r["mu"]) for r in csv.DictReader(io.StringIO(out))}
    want = {nk: v for nk, v in PUBLISHED.items() if nk[0] <= 7}
    assert code == 0
    assert got == want
    assert elapsed < 120


@pytest.mark.criterion(2, "n = 8 row equals published mu, under 30 min")
def test_criterion_2_row_8():
    start = time.perf_counter()
    got = {(8, k): count_canonical_pruned(8, k).mu for k in range(2, 8)}
    elapsed = time.perf_counter() - start
    assert got == {(8, k): PUBLISHED[8, k] for k in range(2, 8)}
    assert elapsed < 1800


@pytest.mark.slow
@pytest.mark.criterion(3, "n = 9 row equals published mu, deterministic")
def test_criterion_3_row_9():
    first = {k: count_canonical_pruned(9, k) for k in range(2, 9)}
    assert {k: r.mu for k, r in first.items()} == {k: PUBLISHED[9, k] for k in range(2, 9)}
    again = {k: count_canonical_pruned(9, k) for k in range(2, 9)}
    assert {k: (r.mu, r.tuples_visited) for k, r in first.items()} == {
        k: (r.mu, r.tuples_visited) for k, r in again.items()
    }


@pytest.mark.criterion(4, "four lambda(n, 2) routes agree for n <= 30 and seeds hold, under 1 s")
def test_criterion_4_lambda2_routes():
    _clear_formula_caches()
    start = time.perf_counter()
    for n in range(1, 31):
        values = {r: formulas.lambda_value(n, 2, r) for r in formulas.LAMBDA2_ROUTES}
        assert len(set(values.values())) == 1, (n, values)
    seeds = [formulas.lambda_value(n, 2, r) for r in formulas.LAMBDA2_ROUTES for n in (1, 2, 3)]
    assert seeds == [0, 1, 6] * 4
    assert formulas.pi_value(4) == 9
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(5, "verify n k exits 0 for all 1 <= k <= n <= 5, under 5 min")
def test_criterion_5_oracle_equivalence(capsys):
    start = time.perf_counter()
    failing = []
    for n in range(1, 6):
        for k in range(1, n + 1):
            if main(["verify", str(n), str(k)]) != 0:
                failing.append((n, k))
    report = capsys.readouterr().out
    assert time.perf_counter() - start < 300
    assert failing == [], f"verify failed for {failing}:\n{report}"


@pytest.mark.criterion(6, "baseline and pruned mu agree for n <= 6; baseline visits C(C(n,k)+n-1, n)")
def test_criterion_6_baseline_vs_pruned():
    for n in range(1, 7):
        for k in range(1, n + 1):
            base = count_canonical(n, k)
            assert base.mu == count_canonical_pruned(n, k).mu, (n, k)
            assert base.tuples_visited == comb(comb(n, k) + n - 1, n), (n, k)


@pytest.mark.criterion(7, "lambda(n, 3) integral for n <= 15; spot values, oracle and complement")
def test_criterion_7_lambda3():
    _clear_formula_caches()
    start = time.perf_counter()
    values = [formulas.lambda_n_3(n) for n in range(1, 16)]
    assert time.perf_counter() - start < 1
    assert all(isinstance(v, int) and v >= 0 for v in values)
    assert values[2] == 1
    assert values[3] == 24 == len(enumerate_lambda_set(4, 3)) == formulas.lambda_n_1(4)
    assert values[4] == 2040 == len(enumerate_lambda_set(5, 3)) == formulas.lambda_n_2_anand(5)


@pytest.mark.criterion(8, "k_subset_masks equals popcount filter for 0 <= k <= n <= 16, under 10 s")
def test_criterion_8_mask_pools():
    start = time.perf_counter()
    for n in range(1, 17):
        buckets = [[] for _ in range(n + 1)]
        for m in range(1 << n):
            buckets[bin(m).count("1")].append(m)
        for k in range(n + 1):
            assert list(k_subset_masks(n, k)) == buckets[k], (n, k)
    assert time.perf_counter() - start < 10
