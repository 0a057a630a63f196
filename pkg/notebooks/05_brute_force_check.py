"""
Brute-force check
=================

For small n the whole set can be enumerated and split into orbits under row
and column permutations. Comparing orbit counts with canonical counts shows
where a class holds more than one canonical element.
"""

# %%
from canonmat import render
from canonmat.oracle import orbit_partition, verify_canonical_uniqueness, verify_counts

for n in range(2, 6):
    for k in range(1, n):
        r = verify_counts(n, k)
        flag = "" if r.mu_oracle == r.mu_enumeration else "  <- classes differ"
        print(f"n={n} k={k}: {r.lambda_oracle:>5} matrices, {r.mu_oracle} classes, {r.mu_enumeration} canonical{flag}")

# %%
# n = 5, k = 2: one class holds three canonical elements.
report = verify_canonical_uniqueness(5, 2)
for idx, members in report.witnesses:
    print(f"class {idx + 1}: {len(members)} canonical elements")
    for t in members:
        print(render(t))

# %%
# For k = 2 the class is fixed by the cycle lengths of the bipartite graph,
# so the class counts are partitions of n into parts of size at least two.
print([len(orbit_partition(n, 2)) for n in range(2, 7)])
