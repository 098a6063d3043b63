"""JSON encodings of matroids, multi-splits, product liftings, subdivisions and catalogs.

Rationals are written as ``"num/den"`` strings.  Element lists are 1-based
and strictly increasing; point indices are 0-based.  Writers are canonical so
that equal objects serialize to identical bytes.
"""

import json
from fractions import Fraction

from . import __version__
from . import subsets as ss
from .engine import PointConfiguration, Subdivision
from .matroid import Matroid, MatroidError, RankedPartition, is_matroid
from .multisplit import MultiSplit
from .stiefel import ProductLifting


class SchemaError(ValueError):
    """Input does not follow the JSON schema (as opposed to violating a math invariant)."""


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def rational_to_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(v):
    if isinstance(v, bool) or isinstance(v, float):
        raise SchemaError(f"expected an exact rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad rational {v!r}") from e
    raise SchemaError(f"expected an exact rational, got {v!r}")


def _int(obj, key):
    v = obj.get(key) if isinstance(obj, dict) else None
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"field {key!r} must be an integer")
    return v


def _keys(obj, required, optional=()):
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object")
    missing = set(required) - set(obj)
    extra = set(obj) - set(required) - set(optional)
    if missing:
        raise SchemaError(f"missing fields: {sorted(missing)}")
    if extra:
        raise SchemaError(f"unknown fields: {sorted(extra)}")


def _element_list(v, n):
    if not isinstance(v, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in v):
        raise SchemaError(f"expected a list of integers, got {v!r}")
    if any(a >= b for a, b in zip(v, v[1:])):
        raise SchemaError(f"element list {v} must be strictly increasing")
    if v and (v[0] < 1 or v[-1] > n):
        raise SchemaError(f"element list {v} leaves [1, {n}]")
    return ss.from_elements(v)


def matroid_to_dict(m):
    return {"n": m.n, "d": m.d, "bases": [list(ss.elements(b)) for b in m.bases]}


def matroid_from_dict(obj):
    _keys(obj, ("n", "d", "bases"))
    n, d = _int(obj, "n"), _int(obj, "d")
    if not isinstance(obj["bases"], list):
        raise SchemaError("'bases' must be a list")
    bases = [_element_list(b, n) for b in obj["bases"]]
    if len(set(bases)) != len(bases):
        raise MatroidError("duplicate bases")
    if any(ss.size(b) != d for b in bases):
        raise MatroidError(f"every basis must have {d} elements")
    if not is_matroid(n, d, bases):
        raise MatroidError("basis exchange axiom fails")
    return Matroid(n, d, tuple(sorted(bases)))


def multisplit_to_dict(ms):
    p = ms.canonical().partition
    return {
        "n": p.n,
        "d": p.rank,
        "blocks": [
            {"elements": list(ss.elements(c)), "rank": r} for c, r in zip(p.blocks, p.ranks)
        ],
    }


def multisplit_from_dict(obj):
    """Parse a multi-split; schema problems raise SchemaError, invariant violations MatroidError."""
    _keys(obj, ("n", "d", "blocks"))
    n, d = _int(obj, "n"), _int(obj, "d")
    if not isinstance(obj["blocks"], list):
        raise SchemaError("'blocks' must be a list")
    blocks, ranks = [], []
    for b in obj["blocks"]:
        _keys(b, ("elements", "rank"))
        blocks.append(_element_list(b["elements"], n))
        ranks.append(_int(b, "rank"))
    ms = MultiSplit(RankedPartition(n, tuple(blocks), tuple(ranks)))
    if ms.d != d:
        raise MatroidError(f"block ranks sum to {ms.d}, header says d={d}")
    return ms


def product_lifting_to_dict(pl):
    return {
        "n": pl.n,
        "base": list(pl.rows),
        "lambda": [
            {"i": i, "j": j, "h": rational_to_str(pl[i, j])} for i in pl.rows for j in pl.cols
        ],
    }


def product_lifting_from_dict(obj):
    _keys(obj, ("n", "base", "lambda"))
    n = _int(obj, "n")
    base = _element_list(obj["base"], n)
    lam = {}
    for entry in obj["lambda"]:
        _keys(entry, ("i", "j", "h"))
        key = (_int(entry, "i"), _int(entry, "j"))
        if key in lam:
            raise SchemaError(f"duplicate lambda entry {key}")
        lam[key] = rational_from_json(entry["h"])
    return ProductLifting(n, base, lam)


def subdivision_to_dict(sub):
    kind = sub.config.kind
    out = {}
    if kind[0] == "hypersimplex":
        out["config"] = "hypersimplex"
        out["n"], out["d"] = kind[2], kind[1]
    else:
        out["config"] = {"points": [[rational_to_str(x) for x in p] for p in sub.config.points]}
        out["n"] = len(sub.config)
        out["d"] = sub.config.ambient_dim
    out["heights"] = [rational_to_str(h) for h in sub.heights]
    out["cells"] = [sorted(c) for c in sub.cells]
    return out


def config_from_dict(obj):
    """Either ``{"config": "hypersimplex", "n", "d"}`` or ``{"points": [...]}``."""
    cfg = obj.get("config", obj) if isinstance(obj, dict) else obj
    if cfg == "hypersimplex":
        return PointConfiguration.hypersimplex(_int(obj, "d"), _int(obj, "n"))
    if isinstance(cfg, dict) and "points" in cfg:
        pts = cfg["points"]
        if not isinstance(pts, list) or not pts:
            raise SchemaError("'points' must be a non-empty list")
        return PointConfiguration(tuple(tuple(rational_from_json(x) for x in p) for p in pts))
    raise SchemaError("unrecognized configuration")


def subdivision_from_dict(obj):
    _keys(obj, ("config", "n", "d", "heights", "cells"))
    pc = config_from_dict(obj)
    heights = tuple(rational_from_json(h) for h in obj["heights"])
    if len(heights) != len(pc):
        raise SchemaError(f"{len(heights)} heights for {len(pc)} points")
    cells = []
    for c in obj["cells"]:
        if not all(isinstance(i, int) and 0 <= i < len(pc) for i in c):
            raise SchemaError(f"bad cell {c}")
        cells.append(frozenset(c))
    return Subdivision(pc, heights, tuple(cells))


def catalog_to_dict(records, d, n, k, classes=None):
    """Catalog of multi-splits; records are sorted by their canonical JSON form."""
    recs = sorted((multisplit_to_dict(ms) for ms in records), key=_record_key)
    out = {
        "header": {"d": d, "n": n, "k": k, "count": len(recs), "version": __version__},
        "records": recs,
    }
    if classes is not None:
        out["classes"] = [
            {"representative": multisplit_to_dict(rep), "orbit_size": size} for rep, size in classes
        ]
    return out


def _record_key(rec):
    return [(b["elements"], b["rank"]) for b in rec["blocks"]]


def catalog_from_dict(obj):
    _keys(obj, ("header", "records"), ("classes",))
    header = obj["header"]
    _keys(header, ("d", "n", "k", "count", "version"))
    records = [multisplit_from_dict(r) for r in obj["records"]]
    if len(records) != header["count"]:
        raise SchemaError(f"header count {header['count']} but {len(records)} records")
    return header, records


def load(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path}: invalid JSON ({e})") from e


def save(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
