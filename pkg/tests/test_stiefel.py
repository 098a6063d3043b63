from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import lower_hull_cells, min_assignment

from hypersplit import subsets as ss
from hypersplit.engine import (
    PointConfiguration,
    hypersimplex_subdivision,
    is_tropical_plucker,
    is_matroid_subdivision,
    regular_subdivision,
    subdivisions_equal,
)
from hypersplit.matroid import corank_vector
from hypersplit.multisplit import MultiSplit, multisplit_cells
from hypersplit.stiefel import (
    NotInCommonCell,
    ProductLifting,
    assignment_min,
    induced_product_lifting,
    search_01_lifting,
    stiefel_lift,
    verify_stiefel_roundtrip,
)

M = ss.from_elements


def by_name(n, d, heights):
    return {ss.fmt(s): h for s, h in zip(ss.k_subsets(n, d), heights)}


def lifting(n, base, entries):
    lam = {(i, j): Fraction(0) for i in ss.elements(base) for j in ss.elements(ss.full(n) & ~base)}
    lam.update({k: Fraction(v) for k, v in entries.items()})
    return ProductLifting(n, base, lam)


def test_assignment_examples():
    assert assignment_min([[0, 1], [1, 0]]) == 0
    assert assignment_min([[1, 0], [0, 1]]) == 0
    assert assignment_min([[5]]) == 5
    assert assignment_min([]) == 0
    w = [[4, 1, 3], [2, 0, 5], [3, 2, 2]]
    assert assignment_min(w, "exhaustive") == assignment_min(w, "hungarian") == 5


def test_assignment_rejects_bad_method():
    with pytest.raises(ValueError):
        assignment_min([[1]], "greedy")


square = st.integers(1, 6).flatmap(
    lambda k: st.lists(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=k, max_size=k),
        min_size=k, max_size=k,
    )
)


@settings(max_examples=80, deadline=None)
@given(square)
def test_hungarian_matches_exhaustive(w):
    want = min_assignment(w)
    assert assignment_min(w, "hungarian") == want
    assert assignment_min(w, "exhaustive") == want
    assert assignment_min(w) == want


def test_lift_example_split():
    pl = lifting(4, M([1, 3]), {(3, 2): 1})
    p = by_name(4, 2, stiefel_lift(pl))
    assert p == {"12": 1, "13": 0, "23": 0, "14": 0, "24": 0, "34": 0}


def test_lift_example_two_bijections():
    pl = lifting(4, M([3, 4]), {(3, 1): 1, (4, 2): 1})
    p = by_name(4, 2, stiefel_lift(pl))
    assert p["12"] == 0
    assert p["34"] == 0


def test_induced_lifting_example():
    ms = MultiSplit.from_blocks(4, [[1, 2], [3, 4]], [1, 1])
    cell = multisplit_cells(ms)[1][1]  # the cell containing 12
    split = corank_vector(multisplit_cells(ms)[1][0])  # 1 at {1,2}
    assert by_name(4, 2, split)["12"] == 1
    pl = induced_product_lifting(split, 4, M([1, 3]))
    assert pl[3, 2] == 1
    assert pl[1, 2] == pl[1, 4] == pl[3, 4] == 0
    assert cell.is_basis(M([1, 2]))


def test_base_outside_common_cell_gives_other_subdivision():
    ms = MultiSplit.from_blocks(4, [[1, 2], [3, 4]], [1, 1])
    common, maximal = multisplit_cells(ms)
    split = corank_vector(maximal[0])
    base = M([3, 4])
    assert not common.is_basis(base)
    pl = induced_product_lifting(split, 4, base)
    relifted = hypersimplex_subdivision(2, 4, stiefel_lift(pl))
    assert not subdivisions_equal(relifted, hypersimplex_subdivision(2, 4, split))
    with pytest.raises(NotInCommonCell):
        verify_stiefel_roundtrip(ms, base)


def test_roundtrip_examples():
    octa = MultiSplit.from_blocks(4, [[1, 2], [3, 4]], [1, 1])
    assert verify_stiefel_roundtrip(octa, M([1, 3]))
    three = MultiSplit.from_blocks(6, [[1, 2], [3, 4], [5, 6]], [1, 1, 1])
    assert verify_stiefel_roundtrip(three, M([1, 3, 5]))
    for cell in range(3):
        assert verify_stiefel_roundtrip(three, M([2, 4, 5]), cell=cell)


def test_product_lifting_validation():
    with pytest.raises(ValueError):
        ProductLifting(4, M([1, 3]), {(1, 2): 0})


# ---- properties --------------------------------------------------------------


@st.composite
def product_liftings(draw, max_n=7, max_d=3, rational=True):
    n = draw(st.integers(4, max_n))
    d = draw(st.integers(2, min(max_d, n - 2)))
    base = ss.from_elements(draw(st.permutations(range(1, n + 1)))[:d])
    values = st.fractions(min_value=-3, max_value=3, max_denominator=3) if rational else st.integers(0, 1)
    lam = {(i, j): Fraction(draw(values)) for i in ss.elements(base) for j in ss.elements(ss.full(n) & ~base)}
    return ProductLifting(n, base, lam)


@settings(max_examples=40, deadline=None)
@given(product_liftings())
def test_single_swaps_recover_lifting(pl):
    p = stiefel_lift(pl)
    idx = ss.colex_index(pl.n, pl.d)
    assert p[idx[pl.base]] == 0
    for (i, j), v in pl.heights.items():
        assert p[idx[(pl.base & ~(1 << (i - 1))) | (1 << (j - 1))]] == v
    assert induced_product_lifting(p, pl.n, pl.base) == pl


@settings(max_examples=40, deadline=None)
@given(product_liftings())
def test_lift_is_plucker(pl):
    assert is_tropical_plucker(stiefel_lift(pl), pl.d, pl.n)


@settings(max_examples=15, deadline=None)
@given(product_liftings(max_n=6), st.data())
def test_lift_subdivision_is_matroidal_and_shift_invariant(pl, data):
    sub = hypersimplex_subdivision(pl.d, pl.n, stiefel_lift(pl))
    assert is_matroid_subdivision(sub)
    # row and column shifts add a linear function on Delta(d, n)
    row = {i: Fraction(data.draw(st.integers(-2, 2))) for i in pl.rows}
    col = {j: Fraction(data.draw(st.integers(-2, 2))) for j in pl.cols}
    shifted = ProductLifting(pl.n, pl.base, {(i, j): v + row[i] + col[j] for (i, j), v in pl.heights.items()})
    assert subdivisions_equal(sub, hypersimplex_subdivision(pl.d, pl.n, stiefel_lift(shifted)))


@settings(max_examples=30, deadline=None)
@given(product_liftings(max_n=5))
def test_lift_methods_agree(pl):
    assert stiefel_lift(pl, "exhaustive") == stiefel_lift(pl, "hungarian")


# ---- 0/1 search --------------------------------------------------------------


def test_search_trivial():
    pc = PointConfiguration.product_of_simplices(2, 2)
    found = search_01_lifting(regular_subdivision(pc, [0] * 4), 2, 2)
    assert found is not None
    assert all(v == 0 for v in found.heights.values())


def test_search_square_diagonal():
    pc = PointConfiguration.product_of_simplices(2, 2)
    for hs in ([1, 0, 0, 0], [0, 1, 0, 0]):
        target = regular_subdivision(pc, hs)
        assert len(target.cells) == 2
        found = search_01_lifting(target, 2, 2)
        assert sum(found.heights.values()) == 1
        assert subdivisions_equal(regular_subdivision(pc, found.product_heights()), target)


GENERIC = [
    # (heights, realizable by a 0/1 lifting)
    ([0, 3, 7, 5, 1, 4, 2, 8, 6], False),
    ([Fraction(1, 2), 0, 5, 3, Fraction(7, 3), 1, 4, 2, 0], False),
    ([Fraction(x * 97 + p, 97) for x, p in zip([0, 1, 1, 1, 0, 1, 1, 1, 0], [3, 1, 4, 1, 5, 9, 2, 6, 5])], True),
]


@pytest.mark.parametrize("heights,realizable", GENERIC)
def test_search_generic_triangulation(heights, realizable):
    pc = PointConfiguration.product_of_simplices(3, 3)
    target = regular_subdivision(pc, heights)
    assert set(target.cells) == lower_hull_cells(pc.points, heights)
    assert all(len(c) == 5 for c in target.cells)
    found = search_01_lifting(target, 3, 3)
    assert (found is not None) == realizable
    if found is not None:
        assert subdivisions_equal(regular_subdivision(pc, found.product_heights()), target)


def test_search_guard():
    pc = PointConfiguration.product_of_simplices(5, 5)
    with pytest.raises(ValueError):
        search_01_lifting(regular_subdivision(pc, [0] * 25), 5, 5)
