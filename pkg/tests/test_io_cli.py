import io
import json

import pytest

from reflarr import catalog
from reflarr.arrangement import ArrangementError, compute_flat_table
from reflarr.cli import run
from reflarr.io import (arrangement_from_json, arrangement_to_json, load_arrangement,
                        save_arrangement, save_multinet)
from reflarr.multinet import hessian_4net


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("text", ["monomial:3:3", "full-monomial:2:4", "hessian", "G32", "G33"])
def test_arrangement_roundtrip(text):
    arr = catalog.build(text)
    back = arrangement_from_json(json.loads(json.dumps(arrangement_to_json(arr))))
    assert back.labels == arr.labels
    assert back.normals() == arr.normals()
    assert not back.is_reflection
    assert compute_flat_table(back).flats == compute_flat_table(arr).flats


@pytest.mark.parametrize("data", [
    {},
    {"cyclotomic_order": 3, "ambient_dim": 2, "hyperplanes": [{"label": "A", "normal": [[1], [0]]}]},
    {"cyclotomic_order": 1, "ambient_dim": 2, "hyperplanes": [{"label": "A", "normal": [1]}]},
    {"cyclotomic_order": 1, "ambient_dim": 2,
     "hyperplanes": [{"label": "A", "normal": [1, 0]}, {"label": "B", "normal": [2, 0]}]},
    {"cyclotomic_order": 0, "ambient_dim": 2, "hyperplanes": []},
])
def test_bad_arrangement_json(data):
    with pytest.raises(ArrangementError):
        arrangement_from_json(data)


def test_build_and_file_commands(tmp_path):
    path = tmp_path / "a.json"
    assert call("build", "--spec", "full-monomial:4:3", "-o", str(path))[0] == 0
    assert load_arrangement(path).n == 15
    code, out = call("--json", "flats", "--file", str(path), "--census")
    assert code == 0
    data = json.loads(out)
    assert data["census"]["I_a"] == {"count": 3, "multiplicity": 6}
    assert sum(f["multiplicity"] * (f["multiplicity"] - 1) // 2 for f in data["flats"]) == 105


def test_betti_command():
    code, out = call("betti", "--spec", "full-monomial:4:3", "--prime", "3")
    assert code == 0 and "beta = 1" in out
    code, out = call("--json", "betti", "--spec", "hessian", "--all-primes")
    rows = json.loads(out)
    assert [r["prime"] for r in rows] == [2, 3, 5, 7, 11]
    assert rows[0]["beta"] == 2 and rows[0]["witness"] is not None


def test_criteria_command():
    code, out = call("--json", "criteria", "--spec", "G32", "--prime", "2")
    assert code == 0
    fired = [c["name"] for c in json.loads(out) if c["fires"]]
    assert any("Gamma_(2)" in name for name in fired)


def test_multinet_commands(tmp_path):
    arr_path, net_path = tmp_path / "h.json", tmp_path / "n.json"
    save_arrangement(catalog.hessian(), arr_path)
    save_multinet(hessian_4net(), net_path)
    code, out = call("--json", "multinet", "verify", "--file", str(arr_path), "--net", str(net_path))
    assert code == 0 and json.loads(out)["valid"]
    code, out = call("--json", "multinet", "search", "--file", str(arr_path), "--k", "4")
    assert code == 0 and len(json.loads(out)) == 1
    code, out = call("monodromy", "--spec", "hessian", "--net", str(net_path))
    assert code == 0 and "[1, 2]" in out


def test_user_errors(tmp_path):
    assert call("betti", "--spec", "monomial:0:3", "--prime", "3")[0] == 1
    assert call("betti", "--spec", "hessian", "--prime", "4")[0] == 1
    assert call("betti", "--spec", "hessian")[0] == 1
    assert call("flats")[0] == 1
    assert call("flats", "--file", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("flats", "--file", str(bad))[0] == 1
    assert call("multinet", "search", "--spec", "G31", "--k", "3")[0] == 1
    assert call("nonsense")[0] == 1


def test_reproduce_is_deterministic():
    first = call("--json", "reproduce", "thm-b", "--m-max", "3")
    second = call("--json", "reproduce", "thm-b", "--m-max", "3")
    assert first == second and first[0] == 0
    assert all(r["ok"] for r in json.loads(first[1])["rows"])
    code, out = call("reproduce", "prop-full", "--m-max", "4")
    assert code == 0 and "MISMATCH" not in out
