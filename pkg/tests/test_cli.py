import json
import subprocess
import sys
from importlib import resources

import pytest

from met_atlas.cli import main

DATA = resources.files("met_atlas") / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


ORB = ("--algebra", "sl", "--n", "6", "--partition", "3,2,1")
SO10 = ("--algebra", "so", "--n", "10", "--partition", "4,4,1,1")


def test_orbit_dim_agrees_with_oracle(capsys):
    code, out, _ = run(capsys, "orbit", *ORB, "dim", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == data["oracle_dim"] == 22


def test_orbit_dim_zero(capsys):
    assert run(capsys, "orbit", "--algebra", "sl", "--n", "3", "--partition", "1,1,1", "dim") == (0, "0\n", "")


def test_orbit_strata(capsys):
    code, out, _ = run(capsys, "orbit", *SO10, "strata", "--format", "json")
    assert code == 0
    assert [3, 3, 2, 2] in [s["partition"] for s in json.loads(out)["strata"]]


def test_exponent_shorthand(capsys):
    assert run(capsys, "orbit", "--algebra", "so", "--n", "10", "--partition", "4^2,1^2", "dim")[1] == "32\n"


def test_polarizations(capsys):
    code, out, _ = run(capsys, "polarizations", *SO10)
    assert code == 0 and out.split() == ["Y_2332^+", "Y_2332^-", "Y_3223^+", "Y_3223^-"]


def test_graph_examples(capsys):
    code, out, _ = run(capsys, "graph", *ORB, "--format", "json")
    assert code == 0 and len(json.loads(out)["nodes"]) == 6
    assert len(json.loads(run(capsys, "graph", *SO10, "--format", "json")[1])["nodes"]) == 4
    data = json.loads(run(capsys, "graph", "--algebra", "sl", "--n", "5", "--partition", "2,2,1", "--format", "json")[1])
    assert len(data["nodes"]) == 2
    assert [(e["class"], e["center"]) for e in data["edges"]] == [("MET", [2, 1, 1, 1])]


def test_graph_dot_and_text(capsys):
    code, out, _ = run(capsys, "graph", *SO10, "--format", "dot")
    assert code == 0 and out.startswith("graph ") and 'label="D-flop"' in out
    code, out, _ = run(capsys, "graph", *ORB)
    assert code == 0 and "6 resolutions" in out


def test_graph_without_polarization(capsys):
    code, _, err = run(capsys, "graph", "--algebra", "so", "--n", "7", "--partition", "2,2,1,1,1")
    assert code == 1 and "no polarization" in err


def test_connect_examples(capsys):
    code, out, _ = run(capsys, "connect", *ORB, "--from", "Y_321", "--to", "Y_132", "--format", "json")
    assert code == 0 and json.loads(out)["net_centers"] == [[2, 2, 2]]
    data = json.loads(run(capsys, "connect", *ORB, "--from", "Y_213", "--to", "Y_213", "--format", "json")[1])
    assert data["steps"] == [] and data["net_centers"] == []
    data = json.loads(run(capsys, "connect", *SO10, "--from", "Y_3223^+", "--to", "Y_2332^+", "--format", "json")[1])
    assert [(s["class"], s["center"]) for s in data["steps"]] == [("MET", [3, 3, 2, 2])]
    out = run(capsys, "connect", *ORB, "--from", "Y_321", "--to", "Y_132")[1]
    assert out.rstrip().endswith("net centers: [2^3]")


def test_connect_unknown_label(capsys):
    code, _, err = run(capsys, "connect", *ORB, "--from", "Y_999", "--to", "Y_123")
    assert code == 1 and "Y_999" in err


@pytest.mark.parametrize("name,holds,gl2,refl", [
    ("dihedral8", False, False, False),  # two classes of reflections
    ("klein", True, True, False),
    ("trivial", True, True, True),
])
def test_group_fixtures(capsys, name, holds, gl2, refl):
    code, out, _ = run(capsys, "group", "--input", str(DATA / f"{name}.json"), "check")
    data = json.loads(out)
    assert code == 0
    assert (data["condition_holds"], data["gl2_uniqueness"], data["reflection_single_class"]) == (holds, gl2, refl)


def test_group_text(capsys):
    code, out, _ = run(capsys, "group", "--input", str(DATA / "dihedral8.json"), "--format", "text")
    assert code == 0 and "fails" in out and "2 class(es)" in out


def test_group_cap_from_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "shear.json"
    path.write_text(json.dumps({"dim": 2, "cyclotomic_order": 1, "generators": [[[1, 1], [0, 1]]]}))
    monkeypatch.setenv("MET_ATLAS_CAP", "40")
    code, _, err = run(capsys, "group", "--input", str(path))
    assert code == 1 and "exceeded 40" in err
    monkeypatch.setenv("MET_ATLAS_CAP", "lots")
    assert run(capsys, "group", "--input", str(DATA / "klein.json"))[0] == 1


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "group", "--input", str(tmp_path / "nope.json"))[0] == 1


@pytest.mark.parametrize("argv", [
    [],
    ["orbit", *ORB],
    ["graph", "--algebra", "e8", "--n", "6", "--partition", "3,2,1"],
    ["graph", *ORB, "--format", "yaml"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_domain_errors_exit_1(capsys):
    assert run(capsys, "orbit", "--algebra", "so", "--n", "6", "--partition", "3,2,1", "dim")[0] == 1
    assert run(capsys, "orbit", "--algebra", "sl", "--n", "6", "--partition", "3,x", "dim")[0] == 1


def test_output_is_deterministic_across_processes():
    cmd = [sys.executable, "-m", "met_atlas", "graph", *SO10, "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
