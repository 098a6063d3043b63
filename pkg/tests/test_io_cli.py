import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersplit import io
from hypersplit import subsets as ss
from hypersplit.cli import main
from hypersplit.engine import PointConfiguration, regular_subdivision, subdivisions_equal
from hypersplit.matroid import MatroidError
from hypersplit.multisplit import enumerate_multisplits
from hypersplit.stiefel import ProductLifting

M = ss.from_elements

OCTA_SPLIT = {"n": 4, "d": 2, "blocks": [{"elements": [1, 2], "rank": 1}, {"elements": [3, 4], "rank": 1}]}
SPLIT_CELL = {"n": 4, "d": 2, "bases": [[1, 3], [2, 3], [1, 4], [2, 4], [3, 4]]}
FIVE_POINTS = {"points": [[0, 0], [3, 0], [0, 3], [3, 3], [1, 1]]}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


# ---- JSON round trips ----------------------------------------------------------


def test_matroid_roundtrip():
    m = io.matroid_from_dict(SPLIT_CELL)
    assert io.matroid_from_dict(io.matroid_to_dict(m)) == m


def test_matroid_rejects():
    with pytest.raises(MatroidError):
        io.matroid_from_dict({"n": 4, "d": 2, "bases": [[1, 2], [3, 4]]})
    with pytest.raises(io.SchemaError):
        io.matroid_from_dict({"n": 4, "d": 2, "bases": [[2, 1]]})
    with pytest.raises(io.SchemaError):
        io.matroid_from_dict({"n": 4, "d": 2, "bases": [[1, 5]]})
    with pytest.raises(io.SchemaError):
        io.matroid_from_dict({"n": 4, "d": 2, "bases": [], "extra": 1})


def test_multisplit_roundtrip_canonical():
    rotated = {"n": 4, "d": 2, "blocks": OCTA_SPLIT["blocks"][::-1]}
    ms = io.multisplit_from_dict(rotated)
    assert io.multisplit_to_dict(ms) == OCTA_SPLIT


def test_multisplit_rejects():
    bad_rank = {"n": 4, "d": 3, "blocks": [{"elements": [1, 2], "rank": 2}, {"elements": [3, 4], "rank": 1}]}
    with pytest.raises(MatroidError):
        io.multisplit_from_dict(bad_rank)
    wrong_d = dict(OCTA_SPLIT, d=3)
    with pytest.raises(MatroidError):
        io.multisplit_from_dict(wrong_d)
    with pytest.raises(io.SchemaError):
        io.multisplit_from_dict({"n": 4, "d": 2, "blocks": [{"elements": [1, 2]}]})


def test_rationals():
    assert io.rational_to_str(Fraction(-3, 6)) == "-1/2"
    assert io.rational_from_json("7/3") == Fraction(7, 3)
    assert io.rational_from_json(4) == 4
    for bad in (0.5, True, "x", [1]):
        with pytest.raises(io.SchemaError):
            io.rational_from_json(bad)


def test_product_lifting_roundtrip():
    pl = ProductLifting(4, M([1, 3]), {(1, 2): 0, (1, 4): Fraction(1, 2), (3, 2): 1, (3, 4): -2})
    assert io.product_lifting_from_dict(io.product_lifting_to_dict(pl)) == pl


def test_subdivision_roundtrip():
    five = io.config_from_dict(FIVE_POINTS)
    for pc, hs in ((five, (0, 0, 0, 3, -1)), (PointConfiguration.hypersimplex(2, 4), (1, 0, 0, 0, 0, 0))):
        sub = regular_subdivision(pc, hs)
        d = io.subdivision_to_dict(sub)
        back = io.subdivision_from_dict(json.loads(io.dumps(d)))
        assert subdivisions_equal(back, sub)
        assert back.heights == sub.heights
        assert io.subdivision_to_dict(back) == d


def test_catalog_roundtrip_bytes():
    recs = list(enumerate_multisplits(3, 6, 3))
    text = io.dumps(io.catalog_to_dict(recs, 3, 6, 3))
    header, back = io.catalog_from_dict(json.loads(text))
    assert header["count"] == 30
    assert io.dumps(io.catalog_to_dict(back, 3, 6, 3)) == text
    # record order in the input does not matter
    assert io.dumps(io.catalog_to_dict(back[::-1], 3, 6, 3)) == text


def test_catalog_count_mismatch():
    obj = io.catalog_to_dict(list(enumerate_multisplits(2, 4, 2)), 2, 4, 2)
    obj["header"]["count"] = 4
    with pytest.raises(io.SchemaError):
        io.catalog_from_dict(obj)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 5, 2), (3, 6, 2), (3, 6, 3), (2, 6, 2)]), st.data())
def test_multisplit_json_property(dnk, data):
    recs = list(enumerate_multisplits(*dnk))
    ms = recs[data.draw(st.integers(0, len(recs) - 1))]
    back = io.multisplit_from_dict(json.loads(io.dumps(io.multisplit_to_dict(ms))))
    assert back.canonical().partition == ms.canonical().partition


# ---- CLI -----------------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,want", [
    (["--hypersimplex", "-d", "2", "-n", "6", "-k", "2"], "25"),
    (["--hypersimplex", "-d", "4", "-n", "8", "-k", "4"], "630"),
    (["--product", "-d", "2", "-l", "2", "-k", "2"], "2"),
    (["-d", "3", "-n", "6", "-k", "3", "--oracle"], "30"),
])
def test_cli_count(capsys, argv, want):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0
    assert out.strip() == want


def test_cli_count_errors(capsys):
    assert run(capsys, "count", "-d", "2", "-n", "4", "-k", "3")[0] == 2
    assert run(capsys, "count", "--product", "-d", "2", "-k", "2")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["count", "--bogus"])
    assert e.value.code == 2


def test_cli_enumerate_and_verify(tmp_path, capsys):
    out = str(tmp_path / "c.json")
    code, _, err = run(capsys, "enumerate", "-d", "3", "-n", "6", "-k", "3", "-o", out)
    assert code == 0 and "30 multi-splits" in err
    assert json.loads(open(out).read())["header"]["count"] == 30
    code, stdout, _ = run(capsys, "verify", out, "--checks", "cells,exchange,stiefel")
    assert code == 0
    assert stdout.strip().endswith("30 record(s), 3 check(s) each, 0 failure(s)")


def test_cli_enumerate_deterministic(tmp_path, capsys):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    run(capsys, "enumerate", "-d", "2", "-n", "5", "--classes", "-o", a)
    run(capsys, "enumerate", "-d", "2", "-n", "5", "--classes", "-o", b)
    assert open(a, "rb").read() == open(b, "rb").read()


def test_cli_enumerate_classes(tmp_path, capsys):
    out = str(tmp_path / "c.json")
    code, _, err = run(capsys, "enumerate", "-d", "2", "-n", "4", "-k", "2", "--classes", "-o", out)
    obj = json.loads(open(out).read())
    assert len(obj["records"]) == 3
    assert [c["orbit_size"] for c in obj["classes"]] == [3]
    code, _, err = run(capsys, "enumerate", "-d", "3", "-n", "6", "--classes", "-o", out)
    assert len(json.loads(open(out).read())["classes"]) == 3


def test_cli_enumerate_bad_range_and_io(tmp_path, capsys):
    assert run(capsys, "enumerate", "-d", "2", "-n", "4", "-k", "3")[0] == 2
    missing = str(tmp_path / "no" / "such" / "dir.json")
    assert run(capsys, "enumerate", "-d", "2", "-n", "4", "-o", missing)[0] == 4


def test_cli_verify_single(tmp_path, capsys):
    path = write(tmp_path, "ms.json", OCTA_SPLIT)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) == 7 and all(ln.startswith("PASS") for ln in lines)


def test_cli_verify_tampered(tmp_path, capsys):
    bad = {"n": 4, "d": 3, "blocks": [{"elements": [1, 2], "rank": 2}, {"elements": [3, 4], "rank": 1}]}
    code, out, _ = run(capsys, "verify", write(tmp_path, "bad.json", bad))
    assert code == 1
    assert out.startswith("FAIL valid:")
    assert "rank" in out


def test_cli_verify_matroid(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", write(tmp_path, "m.json", SPLIT_CELL))
    assert code == 0
    assert "PASS covering" in out
    bad = {"n": 4, "d": 2, "bases": [[1, 2], [3, 4]]}
    code, out, _ = run(capsys, "verify", write(tmp_path, "b.json", bad))
    assert code == 1 and "FAIL valid" in out


def test_cli_verify_parse_errors(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    assert run(capsys, "verify", str(p))[0] == 2
    assert run(capsys, "verify", write(tmp_path, "x.json", {"foo": 1}))[0] == 2
    assert run(capsys, "verify", write(tmp_path, "ms.json", OCTA_SPLIT), "--checks", "nope")[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 4


def test_cli_verify_threads_same_report(tmp_path, capsys, monkeypatch):
    out = str(tmp_path / "c.json")
    run(capsys, "enumerate", "-d", "2", "-n", "5", "-o", out)
    _, serial, _ = run(capsys, "verify", out, "--checks", "cells,corank", "-v")
    monkeypatch.setenv("HYPERSPLIT_THREADS", "2")
    _, parallel, _ = run(capsys, "verify", out, "--checks", "cells,corank", "-v")
    assert serial == parallel


def test_cli_subdivide_points_svg(tmp_path, capsys):
    pts = write(tmp_path, "p.json", FIVE_POINTS)
    hs = write(tmp_path, "h.json", [0, 0, 0, 3, -1])
    svg = str(tmp_path / "f.svg")
    code, out, _ = run(capsys, "subdivide", "--points", pts, "--heights", hs, "--svg", svg)
    assert code == 0
    obj = json.loads(out)
    assert sorted(obj["cells"]) == [[0, 1, 4], [0, 2, 4], [1, 2, 3, 4]]
    text = open(svg).read()
    assert text.startswith("<svg") and text.count("<polygon") == 3 and text.count("<circle") == 5


def test_cli_subdivide_hypersimplex(tmp_path, capsys):
    hs = write(tmp_path, "h.json", ["1/1", 0, 0, 0, 0, 0])
    code, out, _ = run(capsys, "subdivide", "--hypersimplex", "2", "4", "--heights", hs)
    assert code == 0
    obj = json.loads(out)
    assert obj["config"] == "hypersimplex" and len(obj["cells"]) == 2
    code, out, _ = run(capsys, "subdivide", "--hypersimplex", "2", "4")
    assert json.loads(out)["cells"] == [[0, 1, 2, 3, 4, 5]]


def test_cli_subdivide_errors(tmp_path, capsys):
    hs = write(tmp_path, "h.json", [0, 0])
    assert run(capsys, "subdivide", "--hypersimplex", "2", "4", "--heights", hs)[0] == 2
    assert run(capsys, "subdivide")[0] == 2
    svg = str(tmp_path / "x.svg")
    assert run(capsys, "subdivide", "--hypersimplex", "2", "4", "--svg", svg)[0] == 2


def test_cli_stiefel(tmp_path, capsys):
    pl = ProductLifting(4, M([1, 3]), {(1, 2): 0, (1, 4): 0, (3, 2): 1, (3, 4): 0})
    path = write(tmp_path, "pl.json", io.product_lifting_to_dict(pl))
    code, out, _ = run(capsys, "stiefel", "lift", path)
    assert code == 0
    sub = json.loads(out)
    assert sub["heights"] == ["1/1", "0/1", "0/1", "0/1", "0/1", "0/1"]
    assert len(sub["cells"]) == 2
    lifted = write(tmp_path, "sub.json", sub)
    code, out, _ = run(capsys, "stiefel", "restrict", lifted, "--base", "1,3")
    assert code == 0
    assert io.product_lifting_from_dict(json.loads(out)) == pl
    assert run(capsys, "stiefel", "restrict", lifted)[0] == 2


def test_cli_corank_and_plucker(tmp_path, capsys):
    m = write(tmp_path, "m.json", SPLIT_CELL)
    code, out, _ = run(capsys, "corank", m)
    assert code == 0 and len(json.loads(out)["cells"]) == 2
    code, out, _ = run(capsys, "plucker-check", m)
    assert code == 0 and out.strip() == "true"
    bad = write(tmp_path, "p.json", {"n": 4, "d": 2, "heights": [1, 1, 0, 0, 0, 0]})
    code, out, _ = run(capsys, "plucker-check", bad)
    assert code == 1 and out.strip() == "false"


def test_cli_classes(capsys):
    code, out, _ = run(capsys, "classes", "-d", "3", "-n", "6")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypersplit", "count", "-d", "2", "-n", "5", "-k", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "10"


def test_enumerate_verify_pipeline_n_le_6(tmp_path, capsys):
    for n in range(4, 7):
        for d in range(2, n - 1):
            out = str(tmp_path / f"c{d}{n}.json")
            assert run(capsys, "enumerate", "-d", str(d), "-n", str(n), "-o", out)[0] == 0
            code, report, _ = run(capsys, "verify", out)
            assert code == 0, report
