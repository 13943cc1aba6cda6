import json
import subprocess
import sys
from importlib import resources

import pytest

from sparking.cli import main

U42 = "2 4\n1 2 3\n1 2 4\n"
K3 = "vertices 3\n1 0 1\n2 0 2\n3 1 2\n"


@pytest.fixture
def u42_file(tmp_path):
    path = tmp_path / "u42.txt"
    path.write_text(U42)
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text(K3)
    return str(path)


def test_demo_matches_shipped_golden(capsys):
    assert main(["demo", "u42"]) == 0
    out = capsys.readouterr().out
    golden = resources.files("sparking").joinpath("data/u42_table.txt").read_text()
    assert out == golden


def test_demo_table_contents(capsys):
    main(["demo", "u42"])
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    assert lines[3] == "f3  0   2   {3,4}     {1,2}"


def test_map_sigma(u42_file, capsys):
    assert main(["map", u42_file, "--sigma", "0", "0"]) == 0
    assert capsys.readouterr().out == "{1,3}\n"


def test_map_rho(u42_file, capsys):
    assert main(["map", u42_file, "--rho", "2", "3"]) == 0
    assert capsys.readouterr().out == "(0, 1)\n"


def test_map_trace(u42_file, capsys):
    assert main(["map", u42_file, "--sigma", "0", "1", "--trace"]) == 0
    assert capsys.readouterr().out == "FIX 1 1 3\nDEL 2 2 1\nFIX 3 2 2\n{2,3}\n"


def test_map_json(u42_file, capsys):
    assert main(["map", u42_file, "--sigma", "0", "0", "--json", "--trace"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["output"] == [1, 3]
    assert payload["trace"][0] == {"kind": "FIX", "step": 1, "set": 1, "element": 3}


def test_map_rejects_non_member(u42_file, capsys):
    assert main(["map", u42_file, "--sigma", "9", "9"]) == 2


def test_enumerate(u42_file, capsys):
    assert main(["enumerate", u42_file]) == 0
    out = capsys.readouterr().out
    assert "functions (5):" in out
    assert "sets (5):" in out
    assert "(0, 2)" in out and "{3,4}" in out


def test_enumerate_json(u42_file, capsys):
    assert main(["enumerate", u42_file, "--functions", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"functions": [[0, 0], [0, 1], [0, 2], [1, 0], [2, 0]]}


def test_verify_singleton(tmp_path, capsys):
    path = tmp_path / "single.txt"
    path.write_text("1 1\n1\n")
    assert main(["verify", str(path)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "|P|=1 |Q|=1 OK"


def test_verify_random(capsys):
    assert main(["verify", "--random", "5", "--seed", "3"]) == 0
    assert "all OK" in capsys.readouterr().out


def test_verify_random_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("SPARKING_SEED", "12")
    assert main(["verify", "--random", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_matroid_circuit_side(u42_file, tmp_path, capsys):
    assert main(["matroid", "uniform:4:2", "--parts", u42_file,
                 "--side", "circuit"]) == 0
    out = capsys.readouterr().out
    assert "side: circuit" in out
    assert "identity OK" in out
    assert "full cover: no" in out
    assert "{2,4}" in out


def test_matroid_graphic_cocircuit_side(tmp_path, k3_file, capsys):
    parts = tmp_path / "stars.txt"
    parts.write_text("2 3\n1 3\n2 3\n")
    assert main(["matroid", f"graphic:{k3_file}", "--parts", str(parts),
                 "--side", "cocircuit"]) == 0
    out = capsys.readouterr().out
    assert "full cover: yes" in out


def test_matroid_precondition_exit_code(u42_file, tmp_path, capsys):
    parts = tmp_path / "one.txt"
    parts.write_text("1 4\n1 2 3\n")
    assert main(["matroid", "uniform:4:2", "--parts", str(parts),
                 "--side", "circuit"]) == 3
    assert "precondition failed" in capsys.readouterr().err


def test_graph_star_side(k3_file, capsys):
    assert main(["graph", k3_file]) == 0
    out = capsys.readouterr().out
    assert "spanning trees: 3" in out
    assert "bijection onto spanning trees: OK" in out


def test_graph_face_side(k3_file, tmp_path, capsys):
    faces = tmp_path / "faces.txt"
    faces.write_text("1 2 3\n")
    assert main(["graph", k3_file, "--faces", str(faces)]) == 0
    out = capsys.readouterr().out
    assert "(0) -> tree {2,3}" in out


def test_graph_face_precondition(k3_file, tmp_path):
    faces = tmp_path / "faces.txt"
    faces.write_text("1 2\n")
    assert main(["graph", k3_file, "--faces", str(faces)]) == 3


def test_missing_file_is_input_error(capsys):
    assert main(["enumerate", "/no/such/file"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_file_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 4\n1 2 9\n1 2\n")
    assert main(["enumerate", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_module_entry_point(u42_file):
    result = subprocess.run(
        [sys.executable, "-m", "sparking", "map", u42_file, "--sigma", "1", "0"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout == "{1,4}\n"
