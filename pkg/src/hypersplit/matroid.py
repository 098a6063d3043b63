"""Finite matroids given by an explicit list of bases.

Ground sets are ``[n]`` with ``n <= 16``; subsets are int bitmasks (see
:mod:`hypersplit.subsets`).  Bases are kept sorted by mask value so that two
equal matroids compare equal and serialize identically.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from . import subsets as ss
from .linalg import rank as matrix_rank


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class Matroid:
    n: int
    d: int
    bases: tuple

    def __post_init__(self):
        ss.check_n(self.n)
        if not 0 <= self.d <= self.n:
            raise MatroidError(f"rank {self.d} outside [0, {self.n}]")
        bases = tuple(self.bases)
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise MatroidError("a matroid needs at least one basis")
        top = ss.full(self.n)
        for b in bases:
            if b & ~top:
                raise MatroidError(f"basis {ss.fmt(b)} not contained in [{self.n}]")
            if ss.size(b) != self.d:
                raise MatroidError(f"basis {ss.fmt(b)} does not have size {self.d}")
        if any(a >= b for a, b in zip(bases, bases[1:])):
            raise MatroidError("bases must be strictly increasing by mask value")

    @classmethod
    def from_bases(cls, n, d, bases, check=True):
        """Build from any iterable of masks; sorts and (optionally) checks the exchange axiom."""
        m = cls(n, d, tuple(sorted(set(bases))))
        if check and not is_matroid(n, d, m.bases):
            raise MatroidError("basis exchange axiom fails")
        return m

    @cached_property
    def basis_set(self):
        return frozenset(self.bases)

    def is_basis(self, s):
        return s in self.basis_set

    def rank(self, s):
        return rank(self, s)

    def __repr__(self):
        shown = ",".join(ss.fmt(b) for b in self.bases[:12])
        more = "" if len(self.bases) <= 12 else f",... ({len(self.bases)} bases)"
        return f"Matroid(n={self.n}, d={self.d}, bases=[{shown}{more}])"


@dataclass(frozen=True)
class RankedChain:
    """Chain ``F_1 < ... < F_k`` of subsets of [n] with ranks ``r_1 < ... < r_k``."""

    n: int
    flats: tuple
    ranks: tuple

    def __post_init__(self):
        ss.check_n(self.n)
        flats, ranks = tuple(self.flats), tuple(self.ranks)
        object.__setattr__(self, "flats", flats)
        object.__setattr__(self, "ranks", ranks)
        if not flats or len(flats) != len(ranks):
            raise MatroidError("chain needs k >= 1 flats, one rank per flat")
        top = ss.full(self.n)
        for f in flats:
            if f & ~top or f == 0:
                raise MatroidError(f"flat {ss.fmt(f)} must be a non-empty subset of [{self.n}]")
        for a, b in zip(flats, flats[1:]):
            if not (ss.is_subset(a, b) and a != b):
                raise MatroidError("flats must be strictly ascending")
        if ranks[0] < 0 or any(a >= b for a, b in zip(ranks, ranks[1:])):
            raise MatroidError("ranks must satisfy 0 <= r_1 < ... < r_k")
        for f, r in zip(flats, ranks):
            if r >= ss.size(f):
                raise MatroidError(f"rank {r} of flat {ss.fmt(f)} must be < its size")

    @property
    def rank(self):
        return self.ranks[-1] + self.n - ss.size(self.flats[-1])


@dataclass(frozen=True)
class RankedPartition:
    """Blocks ``C_1, ..., C_k`` partitioning [n], with ranks ``0 < d_l < |C_l|``."""

    n: int
    blocks: tuple
    ranks: tuple

    def __post_init__(self):
        ss.check_n(self.n)
        blocks, ranks = tuple(self.blocks), tuple(self.ranks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "ranks", ranks)
        if not blocks or len(blocks) != len(ranks):
            raise MatroidError("partition needs k >= 1 blocks, one rank per block")
        seen = 0
        for c in blocks:
            if c == 0 or c & seen:
                raise MatroidError("blocks must be non-empty and pairwise disjoint")
            seen |= c
        if seen != ss.full(self.n):
            raise MatroidError(f"blocks do not cover [{self.n}]")
        for c, r in zip(blocks, ranks):
            if not 0 < r < ss.size(c):
                raise MatroidError(
                    f"block {ss.fmt(c)} has rank {r}, need 0 < rank < {ss.size(c)}"
                )

    @property
    def k(self):
        return len(self.blocks)

    @property
    def rank(self):
        return sum(self.ranks)

    def rotate(self, t):
        t %= self.k
        return RankedPartition(
            self.n, self.blocks[t:] + self.blocks[:t], self.ranks[t:] + self.ranks[:t]
        )


class Components(NamedTuple):
    components: tuple
    loops: int
    coloops: int


def uniform(d, n):
    ss.check_n(n)
    if not 0 <= d <= n:
        raise MatroidError(f"need 0 <= d <= n, got d={d}, n={n}")
    return Matroid(n, d, ss.k_subsets(n, d))


def partition_matroid(p):
    """Bases are the d-sets meeting every block ``C_l`` in exactly ``d_l`` elements."""
    bases = [
        s
        for s in ss.k_subsets(p.n, p.rank)
        if all(ss.size(s & c) == r for c, r in zip(p.blocks, p.ranks))
    ]
    return Matroid(p.n, p.rank, tuple(bases))


def nested_matroid(c):
    d = c.rank
    bases = [
        s
        for s in ss.k_subsets(c.n, d)
        if all(ss.size(s & f) <= r for f, r in zip(c.flats, c.ranks))
    ]
    return Matroid(c.n, d, tuple(bases))


def is_matroid(n, d, family):
    """Check the basis exchange axiom on a family of d-subsets of [n]."""
    family = list(family)
    if any(ss.size(s) != d for s in family):
        raise MatroidError(f"all subsets must have size {d}")
    if not family:
        return False
    fam = set(family)
    for b1 in fam:
        for b2 in fam:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = b2 & ~b1
            for i in ss.elements(diff1):
                base = b1 & ~(1 << (i - 1))
                if not any(base | (1 << (j - 1)) in fam for j in ss.elements(diff2)):
                    return False
    return True


def rank(m, s):
    return max(ss.size(b & s) for b in m.bases)


def corank_vector(m):
    """Heights ``d - rank(S)`` over the d-subsets of [n] in colex order."""
    return tuple(m.d - rank(m, s) for s in ss.k_subsets(m.n, m.d))


def circuits(m):
    """All minimal dependent sets, by exhaustive scan in order of size."""
    found = []
    for k in range(1, m.d + 2):
        for combo in combinations(range(m.n), k):
            s = sum(1 << i for i in combo)
            if any(ss.is_subset(c, s) for c in found):
                continue
            if rank(m, s) < k:
                found.append(s)
    return found


def connected_components(m):
    """Separators of ``m``, cross-checked against ``n - dim P(M)``.

    Two elements share a component iff they lie on a common circuit.  The
    number of components must match ``n`` minus the rank of the difference
    vectors of the basis indicators; a mismatch raises ``RuntimeError``.
    """
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in circuits(m):
        els = [e - 1 for e in ss.elements(c)]
        for e in els[1:]:
            parent[find(e)] = find(els[0])
    groups = {}
    for e in range(m.n):
        groups[find(e)] = groups.get(find(e), 0) | (1 << e)
    comps = tuple(sorted(groups.values()))

    in_any = 0
    in_all = ss.full(m.n)
    for b in m.bases:
        in_any |= b
        in_all &= b
    loops = ss.full(m.n) & ~in_any

    b0 = ss.indicator(m.bases[0], m.n)
    diffs = [[x - y for x, y in zip(ss.indicator(b, m.n), b0)] for b in m.bases[1:]]
    dim = matrix_rank(diffs) if diffs else 0
    if len(comps) != m.n - dim:
        raise RuntimeError(
            f"component count {len(comps)} disagrees with n - dim P(M) = {m.n - dim}"
        )
    return Components(comps, loops, in_all)


def is_connected(m):
    return len(connected_components(m).components) == 1


def minor(m, restrict_to, contract=0):
    """``(M | restrict_to) / contract``, relabeled onto ``1..|restrict_to - contract|``."""
    if not ss.is_subset(contract, restrict_to):
        raise MatroidError("contracted set must lie inside the restriction")
    if restrict_to & ~ss.full(m.n):
        raise MatroidError("restriction set leaves the ground set")
    ground = ss.elements(restrict_to & ~contract)
    rc = rank(m, contract)
    target = rank(m, restrict_to)
    r = target - rc
    bases = []
    for combo in combinations(ground, r):
        s = ss.from_elements(combo)
        if rank(m, s | contract) == target:
            bases.append(ss.from_elements(ground.index(e) + 1 for e in combo))
    return Matroid(len(ground), r, tuple(sorted(bases)))


def is_flat(m, f):
    r = rank(m, f)
    return all(rank(m, f | (1 << e)) > r for e in range(m.n) if not f >> e & 1)


def cyclic_flats(m):
    """All flats F such that ``M | F`` has no coloops, as ``(mask, rank)`` pairs."""
    out = []
    for f in ss.all_subsets(m.n):
        r = rank(m, f)
        if any(rank(m, f & ~(1 << (e - 1))) < r for e in ss.elements(f)):
            continue
        if is_flat(m, f):
            out.append((f, r))
    out.sort(key=lambda fr: (ss.size(fr[0]), fr[0]))
    return out


def nested_matroids(n):
    """Every nested matroid on [n] exactly once, as ``(matroid, chain-or-None)``.

    A nested matroid is fixed by its chain of cyclic flats ``Z_0 < ... < Z_m``:
    ``Z_0`` is the set of loops, each step ``Z_i - Z_{i-1}`` has size at least
    2 and gains rank strictly between 0 and its size, and everything outside
    ``Z_m`` is a coloop.  The chain is ``None`` for the free matroid.
    """
    ss.check_n(n)
    top = ss.full(n)

    def layers(free, flats, ranks):
        yield flats, ranks
        acc = flats[-1] if flats else 0
        r = ranks[-1] if ranks else 0
        rest = ss.elements(free)
        for size in range(2, len(rest) + 1):
            for combo in combinations(rest, size):
                g = ss.from_elements(combo)
                for inc in range(1, size):
                    yield from layers(free & ~g, flats + (acc | g,), ranks + (r + inc,))

    for loops in ss.all_subsets(n):
        start = ((loops,), (0,)) if loops else ((), ())
        for flats, ranks in layers(top & ~loops, *start):
            if not flats:
                yield uniform(n, n), None
                continue
            chain = RankedChain(n, flats, ranks)
            yield nested_matroid(chain), chain
