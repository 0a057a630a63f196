"""
Rows as integers
================

Each row of an n x n binary matrix is stored as an n-bit integer, leftmost
column in the most significant bit. This script shows the primitives that
work on those integers.
"""

# %%
from canonmat.bitcore import bit_value, k_subset_masks, popcount, to_binary_string

x = 0b01101
print(x, to_binary_string(x, 5), "ones:", popcount(x))
print("bits right to left:", [bit_value(x, i) for i in range(5)])

# %%
# The pool of all 5-bit rows with two ones. It is built by splitting on the
# top bit, so the 32 candidates are never scanned one by one.
pool = k_subset_masks(5, 2)
for m in pool:
    print(f"{m:3d} {to_binary_string(m, 5)}")
print(len(pool), "masks")
