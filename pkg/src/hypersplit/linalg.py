"""Exact linear algebra over the rationals (``fractions.Fraction``).

Matrices are lists of rows.  Nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd


def to_fraction(x):
    """Parse ints, Fractions and ``"num/den"`` strings exactly; floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'num/den'")
    return Fraction(x)


def rref(rows):
    """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{x : A x = 0}`` as a list of vectors."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def inverse(rows):
    n = len(rows)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def independent_rows(rows):
    """Indices of a maximal linearly independent subset of rows (greedy, in order)."""
    chosen = []
    basis = []  # echelon rows with their pivot columns
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for b, p in basis:
            if v[p] != 0:
                f = v[p]
                v = [a - f * c for a, c in zip(v, b)]
        p = next((c for c, x in enumerate(v) if x != 0), None)
        if p is None:
            continue
        inv = 1 / v[p]
        v = [x * inv for x in v]
        basis.append((v, p))
        chosen.append(idx)
    return chosen


def primitive(vec):
    """Scale a rational vector to the primitive integer vector with the same direction."""
    den = 1
    for x in vec:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    return [x // g for x in ints]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))
