"""Exact computations with multi-splits of hypersimplices and products of simplices."""

__version__ = "0.1.0"

from .engine import (
    PointConfiguration,
    Subdivision,
    corank_subdivision,
    hypersimplex_subdivision,
    is_matroid_subdivision,
    is_tropical_plucker,
    negligible_points,
    regular_subdivision,
    secondary_linearity_dimension,
    subdivisions_equal,
    verify_corank_covering,
)
from .matroid import (
    Matroid,
    RankedChain,
    RankedPartition,
    connected_components,
    corank_vector,
    cyclic_flats,
    is_matroid,
    minor,
    nested_matroid,
    nested_matroids,
    partition_matroid,
    rank,
    uniform,
)
from .multisplit import (
    MultiSplit,
    ProductSplit,
    cells_from_inequalities,
    count_multisplits_formula,
    count_product_multisplits_formula,
    enumerate_multisplits,
    enumerate_product_multisplits,
    mu,
    multisplit_cells,
    symmetry_classes,
)
from .stiefel import (
    ProductLifting,
    assignment_min,
    induced_product_lifting,
    search_01_lifting,
    stiefel_lift,
    verify_stiefel_roundtrip,
)
