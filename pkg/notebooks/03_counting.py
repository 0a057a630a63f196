"""
Counting canonical elements
===========================

The reference walk checks every nondecreasing tuple of pool masks. The
pruned search builds tuples row by row and gives up on a prefix as soon as
a column is overfull, a column can no longer be filled, or two adjacent
columns are already out of order.
"""

# %%
import time

from canonmat import count_canonical, count_canonical_pruned

for n, k in [(5, 2), (6, 3), (6, 4)]:
    base = count_canonical(n, k)
    fast = count_canonical_pruned(n, k)
    print(f"n={n} k={k}: mu={base.mu}  baseline visits {base.tuples_visited:>7}  pruned visits {fast.tuples_visited:>4}")

# %%
# The full triangle up to n = 8 takes about a second.
start = time.perf_counter()
for k in range(1, 8):
    row = [count_canonical_pruned(n, k).mu for n in range(k + 1, 9)]
    print(f"k={k}: " + " ".join(f"{v:>5}" for v in row))
print(f"{time.perf_counter() - start:.1f} s")
