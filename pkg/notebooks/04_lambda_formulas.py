"""
Counting all members exactly
============================

lambda(n, k) counts every n x n matrix with k ones per row and column. For
k = 2 four independent routes exist; for k = 3 there is a signed sum over
alpha + beta + gamma = n. All arithmetic is exact.
"""

# %%
from canonmat import formulas

print(f"{'n':>3} {'lambda(n,1)':>12} {'lambda(n,2)':>22} {'lambda(n,3)':>26}")
for n in range(1, 13):
    print(
        f"{n:>3} {formulas.lambda_value(n, 1):>12} {formulas.lambda_value(n, 2):>22} "
        f"{formulas.lambda_value(n, 3):>26}"
    )

# %%
# The four k = 2 routes side by side at n = 25.
for route in formulas.LAMBDA2_ROUTES:
    print(f"{route:>10}: {formulas.lambda_value(25, 2, route)}")

# %%
# Flipping every entry turns k ones per line into n - k.
print(formulas.lambda_n_3(5), formulas.lambda_n_2_good_crook(5))
