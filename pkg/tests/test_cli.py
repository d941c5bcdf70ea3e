import json
import subprocess
import sys

import pytest

from c2charge.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("lam, rows", [("1,0", 4), ("0,0", 1), ("0,1", 5)])
def test_crystal_rows(capsys, lam, rows):
    code, out, _ = run(capsys, "crystal", "--lambda", lam, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "c2charge/1" and doc["lambda"] == [int(x) for x in lam.split(",")]
    assert len(doc["rows"]) == rows
    strings = [r["string"] for r in doc["rows"]]
    assert strings == sorted(strings)


def test_crystal_text_shows_tableaux(capsys):
    code, out, _ = run(capsys, "crystal", "--lambda", "0,1")
    assert code == 0
    assert "2 / -2" in out


def test_decompose_census(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "0,2", "--format", "json")
    doc = json.loads(out)
    assert sorted(a["size"] for a in doc["census"]) == [1, 13]
    assert sum(a["size"] for a in doc["census"]) == len(doc["rows"]) == 14
    _, out, _ = run(capsys, "decompose", "--lambda", "0,3", "--format", "json")
    assert 25 in [a["size"] for a in json.loads(out)["census"]]
    _, out, _ = run(capsys, "decompose", "--lambda", "0,0", "--format", "json")
    assert json.loads(out)["census"] == [{"pat": 0, "at": 0, "zeta": [0, 0], "size": 1}]


def test_kostka_table(capsys):
    code, out, _ = run(capsys, "kostka", "--lambda", "0,2", "--mu", "0,0", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0
    assert row["charge"] == row["oracle"] == [[2, 1], [4, 1]] and row["match"] is True
    code, out, _ = run(capsys, "kostka", "--lambda", "0,1", "--mu", "0,0", "--format", "csv")
    assert out.splitlines() == ["mu,charge,oracle,match", "\"0,0\",q^2,q^2,true"]
    code, out, _ = run(capsys, "kostka", "--lambda", "3,2", "--mu", "3,2")
    assert code == 0 and " 1 " in out


def test_kostka_full_table_matches(capsys):
    code, out, _ = run(capsys, "kostka", "--lambda", "2,2", "--format", "json")
    assert code == 0
    assert all(r["match"] for r in json.loads(out)["rows"])


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--lambda", "0,0")
    assert code == 0 and out == 'digraph "G(0,0)" {\n  "(0,0)";\n}\n'
    _, out, _ = run(capsys, "graph", "--lambda", "2,2")
    assert '"(2,-1)" -> "(4,-3)" [label="2δ-α2∨ [S]"]' in out
    _, twisted, _ = run(capsys, "graph", "--lambda", "2,2", "--m", "8")
    assert '"(4,-3)" -> "(2,-1)"' in twisted
    _, out, _ = run(capsys, "graph", "--lambda", "1,0", "--format", "csv")
    assert out.splitlines()[0] == "source,target,label,index,class"


def test_usage_errors(capsys):
    assert run(capsys, "crystal", "--lambda=-1,0")[0] == 1
    assert run(capsys, "crystal")[0] == 1
    assert run(capsys, "kostka", "--lambda", "1,0", "--mu", "0,1")[0] == 1
    assert run(capsys, "verify", "--bound", "-1")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["crystal", "--lambda", "a,b"])
    assert exc.value.code == 1


def test_verify_trivial_bound(capsys):
    code, out, _ = run(capsys, "verify", "--bound", "0")
    assert code == 0 and out.rstrip().endswith("all checks pass")


def test_verify_bound_four_in_parallel(capsys):
    code, out, _ = run(capsys, "verify", "--bound", "4", "--jobs", "2")
    assert code == 0
    assert out.count("[PASS]") == 10


def test_output_file_and_determinism(tmp_path, capsys):
    path = tmp_path / "out.json"
    assert main(["decompose", "--lambda", "1,2", "--format", "json", "--out", str(path)]) == 0
    first = path.read_bytes()
    assert main(["decompose", "--lambda", "1,2", "--format", "json", "--out", str(path)]) == 0
    assert path.read_bytes() == first
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "c2charge", "crystal", "--lambda", "0,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") == 2
