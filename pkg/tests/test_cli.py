import io
import json

import pytest

from dlambda2.cli import main


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_then_check_pt1(capsys, monkeypatch):
    code, g6, _ = run(capsys, monkeypatch, ["family", "pt1"])
    assert code == 0
    code, out, _ = run(capsys, monkeypatch, ["check", "--json"], g6)
    assert code == 0
    doc = json.loads(out)
    rep = doc["reports"][0]
    assert doc["schema"] == 1
    assert rep["classification"]["verdict"] == "Satisfies" and rep["exact"] is True
    assert abs(rep["lambda2"] + 0.50228) < 1e-4
    assert rep["n"] == 9 and rep["chordal"] and rep["ptolemaic"]


def test_check_human_output(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["check"], "D}{\nC~\n")
    assert code == 0
    assert "structural: Violates (MvsCard3)" in out
    assert "exact: Satisfies" in out


def test_json_round_trip_is_stable(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["check", "--json"], "H~T?__P\n")
    doc = json.loads(out)
    again = json.dumps(doc, indent=2, sort_keys=True)
    assert json.loads(again) == doc and again + "\n" == out


def test_check_is_deterministic(capsys, monkeypatch):
    a = run(capsys, monkeypatch, ["check", "--json"], "E~~?\n")[1]
    b = run(capsys, monkeypatch, ["check", "--json"], "E~~?\n")[1]
    assert a == b


def test_edge_list_input(tmp_path, capsys, monkeypatch):
    f = tmp_path / "g.edges"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, monkeypatch, ["check", "--format", "edges", "--json", str(f)])
    assert code == 0
    assert json.loads(out)["reports"][0]["graph6"] == "Ch"


def test_input_errors(capsys, monkeypatch, tmp_path):
    code, _, err = run(capsys, monkeypatch, ["check"], "C?\n")
    assert code == 2 and "DisconnectedGraph" in err
    code, _, err = run(capsys, monkeypatch, ["check"], "A~\n")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, monkeypatch, ["check"], "")
    assert code == 2
    code, _, _ = run(capsys, monkeypatch, ["check", str(tmp_path / "missing")])
    assert code == 2
    code, _, _ = run(capsys, monkeypatch, ["family", "pt2", "1", "1"])
    assert code == 2
    with pytest.raises(SystemExit):
        main(["family", "nonsense"])


def test_spectrum(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["spectrum", "--json"], "C~\n")
    assert code == 0
    item = json.loads(out)["spectra"][0]
    assert item["charpoly"] == [1, 0, -6, -8, -3]
    assert item["eigenvalues"] == pytest.approx([3, -1, -1, -1])


def test_enumerate_small(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["enumerate", "--max-n", "5", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["disagreements"] == [] and doc["total"] == 1 + 4 + 38 + 728
    code, out, _ = run(capsys, monkeypatch, ["enumerate", "--max-n", "5", "--canonical"])
    assert code == 0 and "disagreements: 0" in out
    code, _, _ = run(capsys, monkeypatch, ["enumerate", "--max-n", "9"])
    assert code == 2


def test_verify_theorems(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify-theorems", "--max-r", "2", "--max-p", "2",
                                             "--max-q", "2", "--max-pt2", "3", "--max-s", "2"])
    assert code == 0
    assert "FAIL" not in out
    code, _, _ = run(capsys, monkeypatch, ["verify-theorems", "--max-pt2", "1"])
    assert code == 2


def test_verify_theorems_reports_failure(capsys, monkeypatch):
    from dlambda2 import families as fam
    from dlambda2.polynomial import Polynomial

    monkeypatch.setattr(fam, "f_polynomial", lambda r, p, q: Polynomial((-1, 0, 0, 0, 0, 1)))
    code, out, _ = run(capsys, monkeypatch, ["verify-theorems", "--max-r", "1", "--max-p", "1",
                                             "--max-q", "1", "--max-pt2", "2", "--max-s", "2"])
    assert code == 1 and "FAIL" in out
