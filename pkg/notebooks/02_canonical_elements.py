"""
Canonical elements
==================

A row tuple is canonical when its rows are nondecreasing and the columns,
read top to bottom as binary numbers, are nondecreasing too. Sorting rows
and columns alternately always reaches one, so every equivalence class
contains at least one canonical element.
"""

# %%
import numpy as np

from canonmat import from_array, is_canonical, render, representatives, to_array, transpose

a = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
    ]
)
rows = from_array(a)
print("rows", rows, "columns", transpose(rows), "canonical:", is_canonical(rows, 2))

# %%
# Sort rows, then columns, until nothing moves.
t = rows
while True:
    s = transpose(tuple(sorted(transpose(tuple(sorted(t))))))
    if s == t:
        break
    t = s
print(render(t))
print("canonical:", is_canonical(t, 2))

# %%
# All canonical elements for n = 4, k = 2, in lexicographic order.
for r in representatives(4, 2):
    print(to_array(r), "\n")
