"""Command line interface: ``hypersplit <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 formula/oracle mismatch, 4 I/O failure.
"""

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import io
from . import subsets as ss
from .certify import MATROID_CHECKS, MULTISPLIT_CHECKS, certify_matroid, certify_multisplit
from .engine import (
    ConfigurationError,
    PointConfiguration,
    corank_subdivision,
    is_tropical_plucker,
    regular_subdivision,
)
from .matroid import MatroidError
from .multisplit import (
    count_multisplits_formula,
    count_product_multisplits_formula,
    enumerate_multisplits,
    enumerate_product_multisplits,
    symmetry_classes,
)
from .stiefel import induced_product_lifting, stiefel_lift
from .svg import render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORACLE, EXIT_IO = 0, 1, 2, 3, 4
THREADS_ENV = "HYPERSPLIT_THREADS"


class UsageError(Exception):
    pass


def _out(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror}") from e


def _ks(d, n, k):
    if k is not None:
        return [k]
    return list(range(2, min(d, n - d) + 1))


def cmd_count(args):
    if args.product:
        if args.l is None:
            raise UsageError("--product needs -l")
        value = count_product_multisplits_formula(args.d, args.l, args.k)
        oracle = (lambda: sum(1 for _ in enumerate_product_multisplits(args.d, args.l, args.k)))
    else:
        if args.n is None:
            raise UsageError("--hypersimplex needs -n")
        value = count_multisplits_formula(args.d, args.n, args.k)
        oracle = (lambda: sum(1 for _ in enumerate_multisplits(args.d, args.n, args.k, max_n=16)))
    print(value)
    if args.oracle:
        brute = oracle()
        if brute != value:
            print(f"oracle mismatch: formula {value}, enumeration {brute}", file=sys.stderr)
            return EXIT_ORACLE
        print(f"oracle agrees: {brute}", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args):
    ks = _ks(args.d, args.n, args.k)
    if not ks:
        raise UsageError(f"no admissible k for d={args.d}, n={args.n}")
    records = [ms for k in ks for ms in enumerate_multisplits(args.d, args.n, k, args.max_n)]
    classes = None
    if args.classes:
        classes = [c for k in ks for c in symmetry_classes(args.d, args.n, k, args.max_n)]
    k_field = args.k if args.k is not None else "all"
    _out(args.output, io.dumps(io.catalog_to_dict(records, args.d, args.n, k_field, classes)))
    print(f"{len(records)} multi-splits"
          + (f", {len(classes)} symmetry classes" if classes is not None else ""), file=sys.stderr)
    return EXIT_OK


def cmd_classes(args):
    ks = _ks(args.d, args.n, args.k)
    for k in ks:
        for rep, size in symmetry_classes(args.d, args.n, k, args.max_n):
            pattern = " ".join(f"({a},{b})" for a, b in rep.invariant())
            print(f"k={k}  orbit={size:<6} {pattern}  e.g. {rep}")
    return EXIT_OK


def _verify_one(kind, record, checks):
    if kind == "matroid":
        return certify_matroid(record, checks)
    return certify_multisplit(record, checks)


def _load_verify_input(obj):
    """Returns (kind, [records]); invariant violations surface as MatroidError."""
    if isinstance(obj, dict) and "records" in obj:
        return "multisplit", io.catalog_from_dict(obj)[1]
    if isinstance(obj, dict) and "blocks" in obj:
        return "multisplit", [io.multisplit_from_dict(obj)]
    if isinstance(obj, dict) and "bases" in obj:
        return "matroid", [io.matroid_from_dict(obj)]
    raise io.SchemaError("input is neither a multi-split, a catalog nor a matroid")


def cmd_verify(args):
    obj = io.load(args.input)
    try:
        kind, records = _load_verify_input(obj)
    except MatroidError as e:
        print(f"FAIL valid: {e}")
        return EXIT_FAIL
    default = MATROID_CHECKS if kind == "matroid" else MULTISPLIT_CHECKS
    checks = tuple(args.checks.split(",")) if args.checks else default
    unknown = set(checks) - set(default)
    if unknown:
        raise UsageError(f"unknown checks for a {kind}: {sorted(unknown)}")
    threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    if threads > 1 and len(records) > 1:
        with ProcessPoolExecutor(threads) as pool:
            results = list(pool.map(_verify_one, [kind] * len(records), records,
                                    [checks] * len(records)))
    else:
        results = [_verify_one(kind, r, checks) for r in records]
    failed = 0
    for idx, (rec, res) in enumerate(zip(records, results)):
        label = repr(rec) if len(records) == 1 else f"#{idx} {rec!r}"
        for c in res:
            status = "PASS" if c.ok else "FAIL"
            tail = f" ({c.detail})" if c.detail else ""
            if c.ok and len(records) > 1 and not args.verbose:
                continue
            print(f"{status} {c.name}: {label}{tail}")
            failed += not c.ok
    print(f"{len(records)} record(s), {len(checks)} check(s) each, {failed} failure(s)")
    return EXIT_FAIL if failed else EXIT_OK


def _read_heights(path, npoints):
    obj = io.load(path)
    if isinstance(obj, dict):
        obj = obj.get("heights")
    if not isinstance(obj, list):
        raise io.SchemaError("heights file must be a list or an object with 'heights'")
    hs = [io.rational_from_json(h) for h in obj]
    if len(hs) != npoints:
        raise UsageError(f"{len(hs)} heights for {npoints} points")
    return hs


def cmd_subdivide(args):
    if args.hypersimplex:
        d, n = args.hypersimplex
        pc = PointConfiguration.hypersimplex(d, n)
    elif args.points:
        pc = io.config_from_dict(io.load(args.points))
    else:
        raise UsageError("give --points FILE or --hypersimplex D N")
    hs = _read_heights(args.heights, len(pc)) if args.heights else [0] * len(pc)
    sub = regular_subdivision(pc, hs)
    _out(args.output, io.dumps(io.subdivision_to_dict(sub)))
    if args.svg:
        if pc.ambient_dim != 2:
            raise UsageError("--svg needs a 2-dimensional configuration")
        _out(args.svg, render(sub))
    return EXIT_OK


def cmd_corank(args):
    m = io.matroid_from_dict(io.load(args.input))
    sub = corank_subdivision(m)
    _out(args.output, io.dumps(io.subdivision_to_dict(sub)))
    return EXIT_OK


def cmd_stiefel(args):
    if args.action == "lift":
        pl = io.product_lifting_from_dict(io.load(args.input))
        hs = stiefel_lift(pl)
        sub = regular_subdivision(PointConfiguration.hypersimplex(pl.d, pl.n), hs)
        _out(args.output, io.dumps(io.subdivision_to_dict(sub)))
    else:
        obj = io.load(args.input)
        if args.base is None:
            raise UsageError("restrict needs --base")
        n = obj.get("n") if isinstance(obj, dict) else None
        if not isinstance(n, int):
            raise UsageError("restrict needs a hypersimplex lifting with 'n'")
        base = ss.from_elements(int(x) for x in args.base.split(","))
        hs = [io.rational_from_json(h) for h in obj["heights"]]
        pl = induced_product_lifting(hs, n, base)
        _out(args.output, io.dumps(io.product_lifting_to_dict(pl)))
    return EXIT_OK


def cmd_plucker(args):
    obj = io.load(args.input)
    if "bases" in obj:
        from .matroid import corank_vector

        m = io.matroid_from_dict(obj)
        hs, d, n = corank_vector(m), m.d, m.n
    else:
        hs = [io.rational_from_json(h) for h in obj["heights"]]
        d, n = obj["d"], obj["n"]
    ok = is_tropical_plucker(hs, d, n)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="hypersplit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="number of k-splits (formula)")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--hypersimplex", action="store_true", help="Delta(d, n) (default)")
    g.add_argument("--product", action="store_true", help="Delta_{d-1} x Delta_{l-1}")
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-n", type=int)
    c.add_argument("-l", type=int)
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--oracle", action="store_true", help="also enumerate and compare")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="write a catalog of canonical multi-splits")
    e.add_argument("-d", type=int, required=True)
    e.add_argument("-n", type=int, required=True)
    e.add_argument("-k", type=int, help="default: every admissible k")
    e.add_argument("-o", "--output", default="-")
    e.add_argument("--classes", action="store_true", help="add symmetry class representatives")
    e.add_argument("--max-n", type=int, default=10)
    e.set_defaults(func=cmd_enumerate)

    cl = sub.add_parser("classes", help="print symmetry classes of multi-splits")
    cl.add_argument("-d", type=int, required=True)
    cl.add_argument("-n", type=int, required=True)
    cl.add_argument("-k", type=int)
    cl.add_argument("--max-n", type=int, default=10)
    cl.set_defaults(func=cmd_classes)

    v = sub.add_parser("verify", help="certify a multi-split, catalog or matroid JSON file")
    v.add_argument("input")
    v.add_argument("--checks", help="comma separated subset of: " + ",".join(MULTISPLIT_CHECKS))
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("subdivide", help="regular subdivision of a lifted configuration")
    s.add_argument("--points", help="JSON file {'points': [[...], ...]}")
    s.add_argument("--hypersimplex", nargs=2, type=int, metavar=("D", "N"))
    s.add_argument("--heights", help="JSON list of rationals (default: all zero)")
    s.add_argument("-o", "--output", default="-")
    s.add_argument("--svg", help="write an SVG drawing (2-dimensional input only)")
    s.set_defaults(func=cmd_subdivide)

    st = sub.add_parser("stiefel", help="tropical Stiefel lift or its restriction to a vertex figure")
    st.add_argument("action", choices=("lift", "restrict"))
    st.add_argument("input")
    st.add_argument("--base", help="restrict: comma separated base set I")
    st.add_argument("-o", "--output", default="-")
    st.set_defaults(func=cmd_stiefel)

    co = sub.add_parser("corank", help="corank subdivision of a matroid JSON file")
    co.add_argument("input")
    co.add_argument("-o", "--output", default="-")
    co.set_defaults(func=cmd_corank)

    pc = sub.add_parser("plucker-check", help="three-term tropical Plucker relations")
    pc.add_argument("input", help="matroid JSON or lifting JSON with n, d, heights")
    pc.set_defaults(func=cmd_plucker)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, io.SchemaError, ConfigurationError, MatroidError, ValueError, KeyError,
            TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
