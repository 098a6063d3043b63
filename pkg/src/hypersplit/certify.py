"""Named verification checks for multi-splits and matroids.

Each check returns a ``Check`` with a short detail string; on failure the
detail names the first counterexample found.
"""

from typing import NamedTuple

from . import subsets as ss
from .engine import (
    corank_subdivision,
    is_matroid_subdivision,
    is_tropical_plucker,
    secondary_linearity_dimension,
    verify_corank_covering,
)
from .matroid import corank_vector, cyclic_flats, is_matroid
from .multisplit import cells_from_inequalities, multisplit_cells
from .stiefel import verify_stiefel_roundtrip

MULTISPLIT_CHECKS = ("cells", "exchange", "corank", "stiefel", "coarse", "plucker", "covering")
MATROID_CHECKS = ("exchange", "corank", "plucker", "covering")


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _cells(ms):
    common, maximal = multisplit_cells(ms)
    p = ms.partition
    for t, m in enumerate(maximal):
        ineq = cells_from_inequalities(p.rotate(t))
        if ineq != m:
            return Check("cells", False, f"rotation {t}: inequality cell differs from nested cell")
        flats = cyclic_flats(m)
        if len(flats) != ms.k + 1:
            return Check("cells", False, f"rotation {t}: {len(flats)} cyclic flats, expected {ms.k + 1}")
        masks = [f for f, _ in flats]
        if any(not ss.is_subset(a, b) for a, b in zip(masks, masks[1:])):
            return Check("cells", False, f"rotation {t}: cyclic flats do not form a chain")
    inter = frozenset.intersection(*(m.basis_set for m in maximal))
    if inter != common.basis_set:
        return Check("cells", False, "intersection of maximal cells differs from the common cell")
    return Check("cells", True, f"{ms.k} maximal cells, common cell with {len(common.bases)} bases")


def _exchange(ms):
    _, maximal = multisplit_cells(ms)
    for t, m in enumerate(maximal):
        if not is_matroid(m.n, m.d, m.bases):
            return Check("exchange", False, f"maximal cell {t} violates basis exchange")
    return Check("exchange", True)


def _corank(ms):
    _, maximal = multisplit_cells(ms)
    want = {m.basis_set for m in maximal}
    for t, m in enumerate(maximal):
        got = set(corank_subdivision(m).cell_subsets())
        if got != want:
            return Check("corank", False, f"corank subdivision of cell {t} has {len(got)} different cells")
    return Check("corank", True)


def _stiefel(ms):
    common, _ = multisplit_cells(ms)
    for b in common.bases:
        if not verify_stiefel_roundtrip(ms, b):
            return Check("stiefel", False, f"round trip through e_I, I={ss.fmt(b)}, fails")
    return Check("stiefel", True, f"{len(common.bases)} base vertices")


def _coarse(ms):
    _, maximal = multisplit_cells(ms)
    sub = corank_subdivision(maximal[0])
    dim, coarsest = secondary_linearity_dimension(sub)
    if not coarsest or dim != ms.n + 1:
        return Check("coarse", False, f"linearity dimension {dim}, expected {ms.n + 1}")
    return Check("coarse", True, f"linearity dimension {dim}")


def _plucker(ms):
    _, maximal = multisplit_cells(ms)
    for t, m in enumerate(maximal):
        if not is_tropical_plucker(corank_vector(m), m.d, m.n):
            return Check("plucker", False, f"corank vector of cell {t} violates a three-term relation")
        if not is_matroid_subdivision(corank_subdivision(m)):
            return Check("plucker", False, f"corank subdivision of cell {t} has a non-matroid cell")
    return Check("plucker", True)


def _covering(ms):
    _, maximal = multisplit_cells(ms)
    for t, m in enumerate(maximal):
        if not verify_corank_covering(m):
            return Check("covering", False, f"cell {t}: some vertex misses every cell touching P(M)")
    return Check("covering", True)


_MS = {
    "cells": _cells,
    "exchange": _exchange,
    "corank": _corank,
    "stiefel": _stiefel,
    "coarse": _coarse,
    "plucker": _plucker,
    "covering": _covering,
}


def certify_multisplit(ms, checks=MULTISPLIT_CHECKS):
    return [_MS[c](ms) for c in checks]


def certify_matroid(m, checks=MATROID_CHECKS):
    out = []
    for c in checks:
        if c == "exchange":
            out.append(Check(c, is_matroid(m.n, m.d, m.bases)))
        elif c == "corank":
            cells = corank_subdivision(m).cell_subsets()
            ok = m.basis_set in cells
            out.append(Check(c, ok, "" if ok else "P(M) is not a cell of its corank subdivision"))
        elif c == "plucker":
            out.append(Check(c, is_tropical_plucker(corank_vector(m), m.d, m.n)))
        elif c == "covering":
            out.append(Check(c, verify_corank_covering(m)))
        else:
            raise ValueError(f"check {c!r} does not apply to matroids")
    return out
