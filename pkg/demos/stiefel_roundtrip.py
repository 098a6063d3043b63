"""
Through a vertex and back
=========================

Restrict a multi-split of Delta(3,6) to the neighbourhood of a vertex in
its common cell, then extend the product lifting with the tropical Stiefel
map.  The subdivision comes back unchanged.
"""

from hypersplit import subsets as ss
from hypersplit import (
    MultiSplit,
    PointConfiguration,
    corank_vector,
    hypersimplex_subdivision,
    induced_product_lifting,
    multisplit_cells,
    regular_subdivision,
    stiefel_lift,
)

ms = MultiSplit.from_blocks(6, [[1, 2], [3, 4], [5, 6]], [1, 1, 1])
common, maximal = multisplit_cells(ms)
heights = corank_vector(maximal[0])

base = ss.from_elements([1, 3, 5])
pl = induced_product_lifting(heights, 6, base)
for row in pl.as_table():
    print([str(x) for x in row])

# the lifting alone already gives a 3-split of Delta_2 x Delta_2
prod = regular_subdivision(PointConfiguration.product_of_simplices(3, 3), pl.product_heights())
print("product cells:", len(prod.cells))

again = hypersimplex_subdivision(3, 6, stiefel_lift(pl))
print("same cells:", set(again.cell_subsets()) == {m.basis_set for m in maximal})

# a vertex outside the common cell does not work
bad = ss.from_elements([1, 2, 3])
print(ss.fmt(bad), "in common cell:", common.is_basis(bad))
other = hypersimplex_subdivision(3, 6, stiefel_lift(induced_product_lifting(heights, 6, bad)))
print("same cells:", set(other.cell_subsets()) == {m.basis_set for m in maximal})
