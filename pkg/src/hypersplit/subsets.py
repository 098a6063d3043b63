"""Subsets of a small ground set ``[n] = {1, ..., n}`` encoded as int bitmasks.

Element ``i`` corresponds to bit ``i - 1``.  For subsets of a fixed
cardinality, ordering by the numeric value of the mask is the colexicographic
order, which is the single index order used for liftings of hypersimplices.
"""

from functools import lru_cache
from itertools import combinations

MAX_N = 16


def check_n(n):
    if not 0 <= n <= MAX_N:
        raise ValueError(f"ground set size must lie in [0, {MAX_N}], got {n}")


def from_elements(elements):
    """Mask of an iterable of 1-based elements."""
    mask = 0
    for e in elements:
        if e < 1 or e > MAX_N:
            raise ValueError(f"element {e} outside [1, {MAX_N}]")
        mask |= 1 << (e - 1)
    return mask


def elements(mask):
    """Sorted tuple of 1-based elements of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask):
    return bin(mask).count("1")


def full(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def fmt(mask):
    """Compact display, e.g. ``{1,3}`` -> ``'13'`` (``'{}'`` for the empty set)."""
    els = elements(mask)
    if not els:
        return "{}"
    if els[-1] < 10:
        return "".join(map(str, els))
    return "{" + ",".join(map(str, els)) + "}"


@lru_cache(maxsize=None)
def k_subsets(n, k):
    """All k-subsets of [n] as masks in colex order."""
    check_n(n)
    if not 0 <= k <= n:
        return ()
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k)]
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def colex_index(n, k):
    """Map mask -> position in ``k_subsets(n, k)``."""
    return {m: i for i, m in enumerate(k_subsets(n, k))}


def all_subsets(n):
    check_n(n)
    return range(1 << n)


def indicator(mask, n):
    """0/1 tuple of length n."""
    return tuple((mask >> i) & 1 for i in range(n))
