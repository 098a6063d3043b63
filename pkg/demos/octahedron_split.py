"""
Splitting the octahedron
========================

The hypersimplex Delta(2,4) is an octahedron.  Lifting one vertex cuts it
into two square pyramids; both pieces are matroid polytopes.
"""

from hypersplit import subsets as ss
from hypersplit import (
    MultiSplit,
    PointConfiguration,
    corank_subdivision,
    multisplit_cells,
    regular_subdivision,
    secondary_linearity_dimension,
)

# vertices are the 2-subsets of [4], in colex order
octa = PointConfiguration.hypersimplex(2, 4)
print([ss.fmt(s) for s in ss.k_subsets(4, 2)])

# raise the vertex e_1 + e_2 by one
sub = regular_subdivision(octa, [1, 0, 0, 0, 0, 0])
for cell in sub.cell_subsets():
    print("cell:", sorted(ss.fmt(s) for s in cell))

# the same split from its ranked partition ({1,2}:1, {3,4}:1)
ms = MultiSplit.from_blocks(4, [[1, 2], [3, 4]], [1, 1])
common, maximal = multisplit_cells(ms)
print("common cell:", [ss.fmt(b) for b in common.bases])

# each maximal cell reproduces the whole split through its corank vector
for m in maximal:
    print(sorted(ss.fmt(b) for b in m.bases), "->", len(corank_subdivision(m).cells), "cells")

# a split is a ray of the secondary fan: one dimension above the affine functions
print("linearity dimension, coarsest:", secondary_linearity_dimension(sub))
