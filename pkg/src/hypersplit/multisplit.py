"""Multi-splits of hypersimplices and of products of simplices.

A k-split of Delta(d, n) is encoded by a cyclically ordered ranked partition
``(C_1, d_1), ..., (C_k, d_k)``.  Its common cell is the partition matroid of
the blocks, and each of its k maximal cells is the nested matroid of the
cumulative unions of a rotation of the blocks.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

from . import subsets as ss
from .matroid import (
    Matroid,
    MatroidError,
    RankedChain,
    RankedPartition,
    nested_matroid,
    partition_matroid,
)

DEFAULT_MAX_N = 10


def _encode(p):
    return tuple((ss.elements(c), r) for c, r in zip(p.blocks, p.ranks))


def canonical_rotation(p):
    """The rotation whose (sorted elements, rank) sequence is lexicographically least."""
    return min((p.rotate(t) for t in range(p.k)), key=_encode)


@dataclass(frozen=True)
class MultiSplit:
    partition: RankedPartition
    canonical_rotation_applied: bool = False

    def __post_init__(self):
        if self.partition.k < 2:
            raise MatroidError("a multi-split needs at least two blocks")

    @classmethod
    def from_blocks(cls, n, blocks, ranks):
        """Build from element lists, e.g. ``from_blocks(4, [[1, 2], [3, 4]], [1, 1])``."""
        return cls(RankedPartition(n, tuple(ss.from_elements(b) for b in blocks), tuple(ranks)))

    def canonical(self):
        return MultiSplit(canonical_rotation(self.partition), True)

    @property
    def n(self):
        return self.partition.n

    @property
    def d(self):
        return self.partition.rank

    @property
    def k(self):
        return self.partition.k

    def invariant(self):
        """Rotation class of the cyclic sequence of (block size, rank) pairs."""
        seq = [(ss.size(c), r) for c, r in zip(self.partition.blocks, self.partition.ranks)]
        return min(tuple(seq[t:] + seq[:t]) for t in range(len(seq)))

    def __repr__(self):
        parts = " ".join(
            f"{ss.fmt(c)}:{r}" for c, r in zip(self.partition.blocks, self.partition.ranks)
        )
        return f"MultiSplit(Delta({self.d},{self.n}); {parts})"


def chain_of(p):
    """Cumulative unions of the blocks with cumulative ranks (the last flat is [n])."""
    flats, ranks = [], []
    acc, r = 0, 0
    for c, dl in zip(p.blocks, p.ranks):
        acc |= c
        r += dl
        flats.append(acc)
        ranks.append(r)
    return RankedChain(p.n, tuple(flats), tuple(ranks))


def multisplit_cells(ms):
    """``(common cell, [maximal cell for each rotation])`` as matroids."""
    p = ms.partition
    common = partition_matroid(p)
    maximal = [nested_matroid(chain_of(p.rotate(t))) for t in range(p.k)]
    return common, maximal


def cells_from_inequalities(p):
    """The d-sets with ``sum_{l<=h} |S & C_l| <= sum_{l<=h} d_l`` for every ``h < k``."""
    bases = []
    for s in ss.k_subsets(p.n, p.rank):
        lhs = rhs = 0
        for c, dl in zip(p.blocks[:-1], p.ranks[:-1]):
            lhs += ss.size(s & c)
            rhs += dl
            if lhs > rhs:
                break
        else:
            bases.append(s)
    return Matroid(p.n, p.rank, tuple(bases))


def _check_range(d, n, k, max_n=DEFAULT_MAX_N):
    if n > max_n:
        raise ValueError(f"n={n} exceeds the guard {max_n}; pass max_n to override")
    if not 2 <= k or not k <= min(d, n - d):
        raise ValueError(f"need 2 <= k <= min(d, n-d), got d={d}, n={n}, k={k}")


def _set_partitions(elements, k, min_size):
    """Unordered partitions of ``elements`` into ``k`` blocks of size >= ``min_size``.

    The first block always holds the smallest element; blocks come out as
    tuples sorted by their smallest element.
    """
    if k == 0:
        if not elements:
            yield ()
        return
    if len(elements) < k * min_size:
        return
    first, rest = elements[0], elements[1:]
    for size in range(min_size - 1, len(rest) + 1):
        for others in combinations(rest, size):
            block = (first,) + others
            remaining = tuple(e for e in rest if e not in others)
            for tail in _set_partitions(remaining, k - 1, min_size):
                yield (block,) + tail


def _rank_vectors(sizes, d):
    """Vectors ``x`` with ``0 < x_l < sizes[l]`` summing to ``d``."""
    for x in product(*(range(1, s) for s in sizes)):
        if sum(x) == d:
            yield x


def enumerate_multisplits(d, n, k, max_n=DEFAULT_MAX_N):
    """Every k-split of Delta(d, n) once, as its canonical rotation.

    The canonical rotation starts with the block holding element 1, so each
    cyclic class is produced by fixing that block and permuting the others.
    """
    _check_range(d, n, k, max_n)
    for blocks in _set_partitions(tuple(range(1, n + 1)), k, 2):
        masks = [ss.from_elements(b) for b in blocks]
        for ranks in _rank_vectors([len(b) for b in blocks], d):
            for order in permutations(range(1, k)):
                seq = (0,) + order
                p = RankedPartition(n, tuple(masks[i] for i in seq), tuple(ranks[i] for i in seq))
                yield MultiSplit(p, True)


def mu(d, n, k, alphas):
    """Number of ``x`` in Z^k with sum d and ``0 < x_j < alpha_j``, ``alpha_k = n - sum(alphas)``."""
    alphas = tuple(alphas)
    if len(alphas) != k - 1:
        raise ValueError(f"need k-1 = {k - 1} block sizes")
    sizes = alphas + (n - sum(alphas),)
    if any(a < 2 for a in sizes):
        raise ValueError("every block size must be at least 2")
    return sum(1 for _ in _rank_vectors(sizes, d))


def count_multisplits_formula(d, n, k):
    """Number of k-splits of Delta(d, n) from block-size compositions and binomials."""
    if not 2 <= k <= min(d, n - d):
        raise ValueError(f"need 2 <= k <= min(d, n-d), got d={d}, n={n}, k={k}")
    total = 0

    def walk(j, beta, alphas, weight):
        nonlocal total
        if j == k - 1:
            total += mu(d, n, k, alphas) * weight
            return
        for a in range(2, beta - 2 * (k - 1 - j) + 1):
            walk(j + 1, beta - a, alphas + (a,), weight * comb(beta, a))

    walk(0, n, (), 1)
    q = Fraction(total, k)
    if q.denominator != 1:
        raise ArithmeticError(f"nested matroid count {total} is not divisible by k={k}")
    return int(q)


def _ordered_partition_count(m, k):
    """Ordered partitions of an m-set into k non-empty blocks, via the nested binomial sum."""
    total = 0

    def walk(j, beta, weight):
        nonlocal total
        if j == k - 1:
            if beta >= 1:
                total += weight
            return
        for a in range(1, beta - (k - 1 - j) + 1):
            walk(j + 1, beta - a, weight * comb(beta, a))

    walk(0, m, 1)
    return total


def count_product_multisplits_formula(d, l, k):
    """Number of k-splits of Delta_{d-1} x Delta_{l-1}."""
    if not 2 <= k <= min(d, l):
        raise ValueError(f"need 2 <= k <= min(d, l), got d={d}, l={l}, k={k}")
    q = Fraction(_ordered_partition_count(d, k) * _ordered_partition_count(l, k), k)
    if q.denominator != 1:
        raise ArithmeticError("product split count is not an integer")
    return int(q)


@dataclass(frozen=True)
class ProductSplit:
    """Pairs ``(A_j, B_j)`` with ``A`` partitioning [d] and ``B`` partitioning [l], up to rotation."""

    d: int
    l: int
    a_blocks: tuple
    b_blocks: tuple

    def to_multisplit(self):
        """Merge ``C_j = A_j | (B_j + d)`` with rank ``|A_j|`` into a k-split of Delta(d, d + l)."""
        blocks = tuple(a | (b << self.d) for a, b in zip(self.a_blocks, self.b_blocks))
        ranks = tuple(ss.size(a) for a in self.a_blocks)
        return MultiSplit(RankedPartition(self.d + self.l, blocks, ranks))

    def __repr__(self):
        a = ",".join(ss.fmt(x) for x in self.a_blocks)
        b = ",".join(ss.fmt(x << self.d) for x in self.b_blocks)
        return f"ProductSplit({a}; {b})"


def _ordered_partitions(m, k):
    for blocks in _set_partitions(tuple(range(1, m + 1)), k, 1):
        for order in permutations(blocks):
            yield tuple(ss.from_elements(b) for b in order)


def enumerate_product_multisplits(d, l, k):
    """Canonical representatives: the A-block holding 1 comes first."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > min(d, l):
        return
    b_orders = list(_ordered_partitions(l, k))
    for a_blocks in _set_partitions(tuple(range(1, d + 1)), k, 1):
        a_masks = [ss.from_elements(b) for b in a_blocks]
        for order in permutations(range(1, k)):
            seq = (0,) + order
            a_seq = tuple(a_masks[i] for i in seq)
            for b_seq in b_orders:
                yield ProductSplit(d, l, a_seq, b_seq)


def symmetry_classes(d, n, k=None, max_n=DEFAULT_MAX_N):
    """S_n-orbits of multi-splits as ``(representative, orbit size)``.

    With ``k=None`` all admissible k are pooled.  Two multi-splits are in
    one orbit iff their cyclic (block size, rank) sequences agree up to
    rotation.
    """
    ks = [k] if k is not None else range(2, min(d, n - d) + 1)
    orbits = defaultdict(list)
    for kk in ks:
        for ms in enumerate_multisplits(d, n, kk, max_n):
            orbits[(kk, ms.invariant())].append(ms)
    return [(members[0], len(members)) for _, members in sorted(orbits.items())]
