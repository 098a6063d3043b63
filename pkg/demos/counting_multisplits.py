"""
Counting multi-splits
=====================

Closed formula against brute-force enumeration, then the same numbers up
to relabeling of the ground set.
"""

from hypersplit import (
    count_multisplits_formula,
    count_product_multisplits_formula,
    enumerate_multisplits,
    symmetry_classes,
)

for n in range(4, 9):
    row = []
    for d in range(2, n - 1):
        total = 0
        for k in range(2, min(d, n - d) + 1):
            f = count_multisplits_formula(d, n, k)
            assert f == sum(1 for _ in enumerate_multisplits(d, n, k))
            total += f
        row.append(total)
    print(f"n={n}:", row)

# classes under permutations of [n]
for n in range(4, 11):
    print(f"Delta(2,{n}) classes:", len(symmetry_classes(2, n, 2)))

for rep, size in symmetry_classes(3, 6):
    print(rep, "orbit size", size)

# products of simplices: k! S(d,k) k! S(l,k) / k
print("Delta_2 x Delta_2:", [count_product_multisplits_formula(3, 3, k) for k in (2, 3)])
