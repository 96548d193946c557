from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from skellim import io
from skellim.cli import main
from skellim.coherent_weights import terminal_weight, weighted_limit
from skellim.comma import arrow_object
from skellim.generate import group_pullback_diagram
from skellim.simplicial.nerve import nerve

from conftest import chain, diamond, divisors


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(io.dumps(doc))
    return str(p)


def test_info_on_builtin(capsys):
    code, out, _ = run(capsys, "sset", "info", "std:2")
    assert code == 0 and out.strip() == "counts (3,3,1) dim 2"


def test_info_json(capsys):
    code, out, _ = run(capsys, "sset", "info", "horn:3:1", "--format", "json")
    assert json.loads(out)["counts"] == [4, 6, 3]


def test_filtration_text(capsys):
    code, out, _ = run(capsys, "sset", "filtration", "std:2")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[:2] == ["stage 1: |L_1| = 3", "stage 2: |L_2| = 1"]
    assert lines[-1].endswith("recomposes: yes")


def test_dot_export(capsys):
    code, out, _ = run(capsys, "sset", "export", "boundary:2", "--format", "dot")
    assert code == 0 and out.count("->") == 3


def test_sset_json_to_file_round_trip(capsys, tmp_path):
    dest = tmp_path / "h.json"
    assert run(capsys, "sset", "horn", "2", "1", "--out", str(dest))[0] == 0
    code, out, _ = run(capsys, "sset", "info", str(dest))
    assert out.startswith("counts (3,2)")


def test_product_and_skeleton(capsys, tmp_path):
    code, out, _ = run(capsys, "sset", "product", "std:1", "std:1")
    sq = write(tmp_path, "sq.json", json.loads(out))
    assert io.sset_from_json(json.loads(out)).counts() == (4, 5, 2)
    code, out, _ = run(capsys, "sset", "skeleton", sq, "--n", "1")
    assert io.sset_from_json(json.loads(out)).counts() == (4, 5)


def test_check_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "qcat", "horn:2:1")
    assert code == 1 and json.loads(out)["verdict"] == "no"
    path = write(tmp_path, "c.json", io.cat_to_json(divisors(12)))
    code, out, _ = run(capsys, "sset", "nerve", "--cat", path)
    n = write(tmp_path, "n.json", json.loads(out))
    code, out, _ = run(capsys, "check", "qcat", n)
    assert code == 0 and json.loads(out)["verdict"] == "yes"


def test_isofibration_check_on_arrow_projection(capsys, tmp_path):
    K = arrow_object(nerve(chain(1)))
    path = write(tmp_path, "p.json", io.map_to_json(K.projection))
    code, out, _ = run(capsys, "check", "isofib", path)
    assert code == 0


def test_gen_is_deterministic_across_hash_seeds(tmp_path):
    outs = set()
    for hs in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=hs)
        r = subprocess.run([sys.executable, "-m", "skellim.cli", "gen", "diagram", "--seed", "7"], env=env,
                           capture_output=True, text=True, check=True)
        outs.add(r.stdout)
    assert len(outs) == 1


def _diagram_file(capsys, tmp_path, seed=3):
    code, out, _ = run(capsys, "gen", "diagram", "--seed", str(seed), "--size", "6")
    assert code == 0
    return write(tmp_path, "d.json", json.loads(out))


@pytest.mark.parametrize("op", ["compute", "colimit"])
def test_limit_both_engines_agree(capsys, tmp_path, op):
    path = _diagram_file(capsys, tmp_path)
    code, out, err = run(capsys, "limit", op, "--diagram", path, "--engine", "both")
    if op == "colimit" and code == 3:
        assert "no colimit" in err or "meet" in err
        return
    doc = json.loads(out)
    assert code == 0 and doc["mode"] == "both" and doc["verdict"] == "yes"


def test_limit_check_certifies_the_computed_cone(capsys, tmp_path):
    from skellim.limit_engine import DiagramInCat
    from skellim.simplicial.constructions import boundary

    d = DiagramInCat(boundary(1), diamond(), {"0": "x", "1": "y"}, {})
    path = write(tmp_path, "d.json", io.diag_to_json(d))
    code, out, _ = run(capsys, "limit", "compute", "--diagram", path)
    cone = write(tmp_path, "cone.json", json.loads(out))
    code, out, _ = run(capsys, "limit", "check", "--diagram", path, "--cone", cone)
    assert code == 0


def test_missing_meet_reports_the_stage(capsys, tmp_path):
    from skellim.category import FiniteCategory
    from skellim.limit_engine import DiagramInCat
    from skellim.simplicial.sset import SimplicialSet

    C = FiniteCategory.from_poset(["x", "y", "t"], lambda a, b: a == b or b == "t")
    d = DiagramInCat(SimplicialSet([["a", "b"]], {}), C, {"a": "x", "b": "y"}, {})
    path = write(tmp_path, "d.json", io.diag_to_json(d))
    code, _, err = run(capsys, "limit", "compute", "--diagram", path)
    assert code == 3 and "X/sk0" in err


def test_pseudo_weight_text(capsys):
    code, out, _ = run(capsys, "weight", "pseudo", "--shape", "horn:2:2", "--format", "text")
    assert code == 0 and "2: counts (3,2)" in out.splitlines()


def test_wlim_with_terminal_weight(capsys, tmp_path):
    F = group_pullback_diagram(4, bound=3)
    W = terminal_weight(F.index)
    wp = write(tmp_path, "w.json", io.weight_to_json(W))
    dp = write(tmp_path, "f.json", io.sdiag_to_json(F))
    code, out, _ = run(capsys, "wlim", "--weight", wp, "--diagram", dp, "--bound", "2")
    assert code == 0
    got = io.sset_from_json(json.loads(out))
    assert got.counts() == weighted_limit(W, F, dim_bound=2).counts()


def test_schema_error_exits_3(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"version": "sset/9"}))
    code, _, err = run(capsys, "sset", "info", str(bad))
    assert code == 3 and err.startswith("skellim:")


def test_usage_error_exits_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["sset", "info"])
    assert info.value.code == 3


def test_missing_file_exits_3(capsys):
    code, _, err = run(capsys, "check", "isofib", "/nonexistent/map.json")
    assert code == 3


def test_gen_lattice_twice_gives_identical_bytes(capsys):
    first = run(capsys, "gen", "lattice", "--seed", "7", "--size", "8")[1]
    second = run(capsys, "gen", "lattice", "--seed", "7", "--size", "8")[1]
    assert first == second
    C = io.cat_from_json(json.loads(first))
    assert len(C.objects) <= 8


def test_bound_environment_override(monkeypatch):
    from skellim.config import RunConfig

    monkeypatch.setenv("SKELLIM_BOUND", "5")
    cfg = RunConfig.from_env()
    assert cfg.dim_bound == cfg.lifting_bound == 5
    assert RunConfig.from_env(lifting_bound=2).lifting_bound == 2
    monkeypatch.setenv("SKELLIM_BOUND", "0")
    with pytest.raises(ValueError):
        RunConfig.from_env()
