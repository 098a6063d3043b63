"""Tropical Stiefel map: liftings of Delta_{d-1} x Delta_{n-d-1} extended to Delta(d, n).

A product lifting assigns a height ``lam[i, j]`` to every pair ``i`` in the
base set ``I`` and ``j`` outside it.  The extension gives the vertex ``e_J``
the weight of a minimum assignment between ``I - J`` and ``J - I``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from . import subsets as ss
from .engine import PointConfiguration, hypersimplex_subdivision, regular_subdivision
from .linalg import to_fraction
from .matroid import corank_vector, partition_matroid
from .multisplit import multisplit_cells

EXHAUSTIVE_LIMIT = 4
SEARCH_LIMIT = 20


class NotInCommonCell(ValueError):
    """The chosen base vertex is not a basis of the common cell."""


@dataclass(frozen=True)
class ProductLifting:
    n: int
    base: int
    heights: dict

    def __post_init__(self):
        ss.check_n(self.n)
        if self.base & ~ss.full(self.n):
            raise ValueError("base set leaves the ground set")
        hs = {(int(i), int(j)): to_fraction(h) for (i, j), h in dict(self.heights).items()}
        expected = {(i, j) for i in self.rows for j in self.cols}
        if set(hs) != expected:
            raise ValueError(
                f"heights must be given exactly on I x ([n]-I) ({len(expected)} entries)"
            )
        object.__setattr__(self, "heights", hs)

    @property
    def d(self):
        return ss.size(self.base)

    @property
    def rows(self):
        return ss.elements(self.base)

    @property
    def cols(self):
        return ss.elements(ss.full(self.n) & ~self.base)

    def __getitem__(self, ij):
        return self.heights[ij]

    def as_table(self):
        """Heights as a list of rows (base elements) by columns (complement)."""
        return [[self.heights[i, j] for j in self.cols] for i in self.rows]

    def product_heights(self):
        """Heights on ``PointConfiguration.product_of_simplices(d, n - d)``."""
        return tuple(h for row in self.as_table() for h in row)

    @classmethod
    def from_table(cls, n, base, table):
        rows = ss.elements(base)
        cols = ss.elements(ss.full(n) & ~base)
        return cls(n, base, {(i, j): table[a][b] for a, i in enumerate(rows) for b, j in enumerate(cols)})


def _assignment_bruteforce(w):
    k = len(w)
    if k == 0:
        return Fraction(0)
    return min(sum(w[i][p[i]] for i in range(k)) for p in permutations(range(k)))


def _assignment_hungarian(w):
    """Shortest augmenting path method with exact potentials."""
    k = len(w)
    if k == 0:
        return Fraction(0)
    u = [Fraction(0)] * (k + 1)
    v = [Fraction(0)] * (k + 1)
    match = [0] * (k + 1)  # match[j] = row assigned to column j (1-based, 0 = free)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        match[0] = i
        j0 = 0
        minv = [None] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = None
            j1 = 0
            for j in range(1, k + 1):
                if used[j]:
                    continue
                cur = w[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(k + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    return sum(w[match[j] - 1][j - 1] for j in range(1, k + 1))


def assignment_min(weights, method="auto"):
    """Minimum of ``sum_i weights[i][omega(i)]`` over bijections ``omega``.

    ``method`` is ``"auto"`` (enumeration up to size 4, Hungarian beyond),
    ``"exhaustive"`` or ``"hungarian"``.
    """
    w = [[to_fraction(x) for x in row] for row in weights]
    if any(len(row) != len(w) for row in w):
        raise ValueError("assignment needs a square weight table")
    if method == "exhaustive" or (method == "auto" and len(w) <= EXHAUSTIVE_LIMIT):
        return _assignment_bruteforce(w)
    if method in ("hungarian", "auto"):
        return _assignment_hungarian(w)
    raise ValueError(f"unknown method {method!r}")


def stiefel_pi(pl, a, b, method="auto"):
    """Minimum assignment of the base elements ``a`` to the outside elements ``b``."""
    rows, cols = ss.elements(a), ss.elements(b)
    if len(rows) != len(cols):
        raise ValueError("sets must have equal size")
    return assignment_min([[pl[i, j] for j in cols] for i in rows], method)


def stiefel_lift(pl, method="auto"):
    """Heights on Delta(d, n) in colex order: ``p(J) = pi(I - J, J - I)``."""
    I = pl.base
    return tuple(
        stiefel_pi(pl, I & ~J, J & ~I, method) for J in ss.k_subsets(pl.n, pl.d)
    )


def induced_product_lifting(heights, n, base):
    """Restrict a lifting of Delta(d, n) to the neighbours of ``e_I``, normalized so ``p(I) = 0``."""
    d = ss.size(base)
    idx = ss.colex_index(n, d)
    heights = [to_fraction(h) for h in heights]
    if len(heights) != len(idx):
        raise ValueError(f"expected {len(idx)} heights for Delta({d},{n})")
    h0 = heights[idx[base]]
    lam = {}
    for i in ss.elements(base):
        for j in ss.elements(ss.full(n) & ~base):
            swapped = (base & ~(1 << (i - 1))) | (1 << (j - 1))
            lam[i, j] = heights[idx[swapped]] - h0
    return ProductLifting(n, base, lam)


def verify_stiefel_roundtrip(ms, base, cell=0):
    """Re-lift the corank vector of maximal cell ``cell`` through ``e_I`` and compare cells."""
    common, maximal = multisplit_cells(ms)
    if not common.is_basis(base):
        raise NotInCommonCell(f"{ss.fmt(base)} is not a basis of the common cell")
    m = maximal[cell]
    pl = induced_product_lifting(corank_vector(m), m.n, base)
    sub = hypersimplex_subdivision(m.d, m.n, stiefel_lift(pl))
    return set(sub.cell_subsets()) == {c.basis_set for c in maximal}


def search_01_lifting(target, d, l):
    """A 0/1 product lifting realizing ``target`` on Delta_{d-1} x Delta_{l-1}, or None.

    Exhaustive over all ``2**(d*l)`` vectors; the first hit in lexicographic
    order is returned.
    """
    if d * l > SEARCH_LIMIT:
        raise ValueError(f"search space 2**{d * l} exceeds the 2**{SEARCH_LIMIT} guard")
    pc = PointConfiguration.product_of_simplices(d, l)
    if target.config.points != pc.points:
        raise ValueError("target is not a subdivision of the product of simplices")
    want = set(target.cells)
    for bits in product((0, 1), repeat=d * l):
        if set(regular_subdivision(pc, bits).cells) == want:
            table = [bits[a * l:(a + 1) * l] for a in range(d)]
            return ProductLifting.from_table(d + l, ss.full(d), table)
    return None
