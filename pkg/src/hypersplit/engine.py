"""Regular subdivisions of point configurations, computed exactly.

The lifted configuration ``{(x_p, h_p)}`` plus the upward ray spans a
polyhedral cone after homogenization.  Its facets are found with the
incremental double description method over Python integers; facets whose
normal has a positive height component are the lower facets, and the points
tight on each of them form the maximal cells.  Each cell keeps its facet
normal, which is an affine function agreeing with the heights on the cell and
strictly below them elsewhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from . import subsets as ss
from .linalg import dot, primitive, rank, rref, to_fraction
from .matroid import corank_vector, is_matroid


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple
    kind: tuple = ("explicit",)

    def __post_init__(self):
        pts = tuple(tuple(to_fraction(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ConfigurationError("a configuration needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ConfigurationError("points must share one ambient dimension")
        if len(set(pts)) != len(pts):
            raise ConfigurationError("points must be pairwise distinct")

    @classmethod
    def hypersimplex(cls, d, n):
        """Vertices of Delta(d, n), indexed by d-subsets in colex order."""
        return _hypersimplex(d, n)

    @classmethod
    def product_of_simplices(cls, d, l):
        """Vertices ``(e_i, e_j)`` of Delta_{d-1} x Delta_{l-1}; index ``(i-1)*l + (j-1)``."""
        pts = []
        for i in range(d):
            for j in range(l):
                v = [0] * (d + l)
                v[i] = 1
                v[d + j] = 1
                pts.append(tuple(v))
        return cls(tuple(pts), ("product", d, l))

    def __len__(self):
        return len(self.points)

    @property
    def ambient_dim(self):
        return len(self.points[0])

    @cached_property
    def chart(self):
        """Coordinate indices that parametrize the affine hull injectively."""
        p0 = self.points[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in self.points[1:]]
        if not diffs:
            return ()
        return tuple(rref(diffs)[1])

    @property
    def dim(self):
        return len(self.chart)

    @cached_property
    def _local(self):
        return tuple(tuple(p[c] for c in self.chart) for p in self.points)

    def local(self, i):
        """Point ``i`` in chart coordinates."""
        return self._local[i]


@lru_cache(maxsize=64)
def _hypersimplex(d, n):
    pts = [ss.indicator(s, n) for s in ss.k_subsets(n, d)]
    return PointConfiguration(tuple(pts), ("hypersimplex", d, n))


@dataclass(frozen=True)
class Subdivision:
    config: PointConfiguration
    heights: tuple
    cells: tuple
    witnesses: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(Fraction(h) for h in self.heights))
        cells = tuple(frozenset(c) for c in self.cells)
        order = sorted(range(len(cells)), key=lambda i: sorted(cells[i]))
        object.__setattr__(self, "cells", tuple(cells[i] for i in order))
        if self.witnesses:
            object.__setattr__(self, "witnesses", tuple(self.witnesses[i] for i in order))

    def witness_value(self, c, i):
        """Value at point ``i`` of the affine witness of cell ``c``."""
        const, coeffs = self.witnesses[c]
        return const + dot(coeffs, self.config.local(i))

    @property
    def used_points(self):
        out = set()
        for c in self.cells:
            out |= c
        return out

    def cell_subsets(self):
        """For hypersimplex configurations: cells as frozensets of d-subset masks."""
        kind = self.config.kind
        if kind[0] != "hypersimplex":
            raise ConfigurationError("cells are basis sets only on hypersimplex configurations")
        masks = ss.k_subsets(kind[2], kind[1])
        return [frozenset(masks[i] for i in c) for c in self.cells]

    def __repr__(self):
        return f"Subdivision({len(self.cells)} cells on {len(self.config)} points)"


def _independent_int_rows(rows):
    """Greedy maximal independent subset of integer rows (fraction-free elimination)."""
    chosen = []
    basis = []
    for idx, row in enumerate(rows):
        v = list(row)
        for b, p in basis:
            if v[p]:
                f, g_ = b[p], v[p]
                v = [f * x - g_ * y for x, y in zip(v, b)]
        p = next((c for c, x in enumerate(v) if x), None)
        if p is None:
            continue
        g_ = 0
        for x in v:
            g_ = gcd(g_, x)
        basis.append(([x // g_ for x in v], p))
        chosen.append(idx)
        if len(chosen) == len(row):
            break
    return chosen


def _inverse_columns(mat):
    """Primitive integer directions of the columns of ``mat**-1`` (fraction-free Gauss-Jordan)."""
    k = len(mat)
    aug = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(mat)]
    for c in range(k):
        piv = next(r for r in range(c, k) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        for r in range(k):
            if r != c and aug[r][c]:
                f, g_ = aug[c][c], aug[r][c]
                row = [f * x - g_ * y for x, y in zip(aug[r], aug[c])]
                h = 0
                for x in row:
                    h = gcd(h, x)
                aug[r] = [x // h for x in row]
    cols = []
    for j in range(k):
        col = [Fraction(aug[i][k + j], aug[i][i]) for i in range(k)]
        cols.append(primitive(col))
    return cols


def _dd_facets(gens):
    """Extreme rays of ``{y : g . y >= 0 for g in gens}`` for integer generators.

    ``gens`` must span the whole space so the dual cone is pointed.  Returns
    ``(ray, zero_mask)`` pairs where bit ``t`` of the mask marks ``gens[t]``
    as tight.
    """
    dim = len(gens[0])
    basis = _independent_int_rows(gens)
    if len(basis) != dim:
        raise ConfigurationError("generators do not span the space")
    rays = _inverse_columns([gens[i] for i in basis])
    zeros = []
    done = 0
    for i in basis:
        done |= 1 << i
    for j, r in enumerate(rays):
        zeros.append(sum(1 << basis[t] for t in range(dim) if t != j))

    for t, g in enumerate(gens):
        if done >> t & 1:
            continue
        vals = [dot(g, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_zeros = [zeros[i] for i in pos] + [zeros[i] | (1 << t) for i in zer]
        for p in pos:
            zp = zeros[p]
            for q in neg:
                z = zp & zeros[q]
                if bin(z).count("1") < dim - 2:
                    continue
                if any(
                    o != p and o != q and z & zeros[o] == z for o in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], -vals[q]
                ray = [vp * a + vq * b for a, b in zip(rays[q], rays[p])]
                g_ = 0
                for x in ray:
                    g_ = gcd(g_, x)
                ray = [x // g_ for x in ray]
                new_rays.append(ray)
                new_zeros.append(z | (1 << t))
        rays, zeros = new_rays, new_zeros
        done |= 1 << t
    return list(zip(rays, zeros))


def _int_row(values):
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    return [int(v * den) for v in values]


def regular_subdivision(pc, heights):
    """Maximal cells of the lower hull of ``pc`` lifted by ``heights``.

    Points lifted strictly above the lower hull belong to no cell.
    """
    heights = tuple(to_fraction(h) for h in heights)
    if len(heights) != len(pc):
        raise ConfigurationError(f"expected {len(pc)} heights, got {len(heights)}")
    a = pc.dim
    gens = [
        _int_row([Fraction(1), *pc.local(i), heights[i]]) for i in range(len(pc))
    ]
    gens.append([0] * (a + 1) + [1])
    point_mask = (1 << len(pc)) - 1
    cells = []
    witnesses = []
    for ray, zero in _dd_facets(gens):
        if ray[-1] <= 0:
            continue
        cells.append(frozenset(i for i in range(len(pc)) if zero >> i & 1))
        scale = Fraction(-1, ray[-1])
        # facet y.(1, x, h) >= 0 reads h >= -(y0 + c.x) / y_last
        witnesses.append((ray[0] * scale, tuple(c * scale for c in ray[1:-1])))
        assert zero & point_mask
    return Subdivision(pc, heights, tuple(cells), tuple(witnesses))


def check_witnesses(sub):
    """Verify every stored witness: tight on its cell, strictly below elsewhere."""
    for c, cell in enumerate(sub.cells):
        for i, h in enumerate(sub.heights):
            g = sub.witness_value(c, i)
            if i in cell and g != h:
                return False
            if i not in cell and not g < h:
                return False
    return True


def hull_vertices(pc, indices):
    """Indices among ``indices`` that are vertices of their convex hull."""
    indices = sorted(indices)
    sub = PointConfiguration(tuple(pc.points[i] for i in indices))
    if len(indices) == 1:
        return set(indices)
    gens = [_int_row([Fraction(1), *sub.local(i)]) for i in range(len(sub))]
    facets = [z for _, z in _dd_facets(gens)]
    verts = set()
    for t, i in enumerate(indices):
        face = -1
        for z in facets:
            if z >> t & 1:
                face &= z
        if face & ((1 << len(indices)) - 1) == 1 << t:
            verts.add(i)
    return verts


def negligible_points(sub):
    """Points lying in some cell without being a vertex of any cell."""
    verts = set()
    for cell in sub.cells:
        verts |= hull_vertices(sub.config, cell)
    return sub.used_points - verts


def subdivisions_equal(a, b):
    if a.config.points != b.config.points:
        raise ConfigurationError("subdivisions live on different configurations")
    return set(a.cells) == set(b.cells)


def hypersimplex_subdivision(d, n, heights):
    return regular_subdivision(PointConfiguration.hypersimplex(d, n), heights)


def corank_subdivision(m):
    return hypersimplex_subdivision(m.d, m.n, corank_vector(m))


def is_matroid_subdivision(sub):
    if sub.config.kind[0] != "hypersimplex":
        raise ConfigurationError("matroid subdivisions live on hypersimplex configurations")
    d = sub.config.kind[1]
    n = sub.config.kind[2]
    return all(is_matroid(n, d, cell) for cell in sub.cell_subsets())


def is_tropical_plucker(heights, d, n):
    """Three-term tropical Plücker relations: each minimum is attained twice."""
    heights = tuple(to_fraction(h) for h in heights)
    if len(heights) != len(ss.k_subsets(n, d)):
        raise ConfigurationError("heights do not match the d-subsets of [n]")
    if d < 2 or d > n - 2:
        return True
    idx = ss.colex_index(n, d)
    p = {m: heights[i] for m, i in idx.items()}
    for s in ss.k_subsets(n, d - 2):
        rest = [e for e in range(n) if not s >> e & 1]
        for a in range(len(rest)):
            for b in range(a + 1, len(rest)):
                for c in range(b + 1, len(rest)):
                    for e in range(c + 1, len(rest)):
                        i, j, k, l = (1 << rest[x] for x in (a, b, c, e))
                        terms = sorted(
                            (
                                p[s | i | j] + p[s | k | l],
                                p[s | i | k] + p[s | j | l],
                                p[s | i | l] + p[s | j | k],
                            )
                        )
                        if terms[0] != terms[1]:
                            return False
    return True


def secondary_linearity_dimension(sub):
    """Dimension of the liftings that are affine on every cell, and the coarseness flag.

    Returns ``(dim_W, is_coarsest)`` with ``is_coarsest`` meaning ``dim_W``
    exceeds the global affine functions by exactly one, i.e. a ray of the
    secondary fan.
    """
    pc = sub.config
    npts = len(pc)
    if sub.used_points != set(range(npts)):
        raise ConfigurationError("every point must lie in some cell")
    a = pc.dim
    k = len(sub.cells)
    width = npts + k * (a + 1)
    rows = []
    for c, cell in enumerate(sub.cells):
        for i in sorted(cell):
            row = [0] * width
            row[i] = 1
            off = npts + c * (a + 1)
            row[off] = -1
            for t, x in enumerate(pc.local(i)):
                row[off + 1 + t] = -x
            rows.append(row)
    full_rank = rank(rows)
    g_rank = rank([r[npts:] for r in rows])
    dim_w = npts - full_rank + g_rank
    return dim_w, dim_w == a + 2


def verify_corank_covering(m):
    """Every vertex lies in a maximal corank cell that meets the bases of ``m``."""
    sub = corank_subdivision(m)
    cells = sub.cell_subsets()
    touching = [c for c in cells if c & m.basis_set]
    return all(any(s in c for c in touching) for s in ss.k_subsets(m.n, m.d))
