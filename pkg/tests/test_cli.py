import json

import pytest

from fixgraph.cli import run_cli


@pytest.fixture
def stdin(monkeypatch):
    import io
    import sys

    def feed(text):
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(text.encode())))

    return feed


def test_fix_from_stdin(stdin, capsys):
    stdin("Bw\n")
    assert run_cli(["fix", "--format", "graph6", "-"]) == 0
    out = capsys.readouterr().out
    assert "fix=2" in out and "witness=0 1" in out


def test_fix_json(stdin, capsys):
    stdin("Bw\nA_\n")
    assert run_cli(["fix", "--json", "-"]) == 0
    rows = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert [r["fix_number"] for r in rows] == [2, 1]


def test_edgelist_input(tmp_path, capsys):
    p = tmp_path / "c4.txt"
    p.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    assert run_cli(["aut", "--format", "edgelist", "--json", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["group_order"] == 8


def test_orbits_and_canon(stdin, capsys):
    stdin("Bg\n")
    assert run_cli(["orbits", "-"]) == 0
    assert capsys.readouterr().out.strip() == "Bg\t0 2 | 1"
    stdin("Bg\n")
    run_cli(["canon", "-"])
    a = capsys.readouterr().out
    stdin("BW\n")
    run_cli(["canon", "-"])
    assert a == capsys.readouterr().out


def test_convert(stdin, capsys):
    stdin("Bg\n")
    assert run_cli(["convert", "--to", "edgelist", "-"]) == 0
    assert capsys.readouterr().out == "n 3\n0 1\n1 2\n"


def test_product_writes_sidecar(tmp_path):
    (tmp_path / "g1.g6").write_text("Bw\n")
    (tmp_path / "g2.g6").write_text("A_\n")
    out = tmp_path / "out.g6"
    assert run_cli(["product", "--op", "corona", str(tmp_path / "g1.g6"), str(tmp_path / "g2.g6"), "-o", str(out)]) == 0
    side = json.loads((tmp_path / "out.coord.json").read_text())
    assert side["order"] == 9 and side["kind"] == "corona"
    assert out.read_text().strip()


def test_product_iterated(tmp_path, capsys):
    (tmp_path / "p2.g6").write_text("A_\n")
    p = str(tmp_path / "p2.g6")
    assert run_cli(["product", "--op", "corona-iter", "--k", "2", "--json", p, p]) == 0
    assert json.loads(capsys.readouterr().out)["order"] == 18


def test_usage_errors(stdin, capsys):
    assert run_cli(["bogus"]) == 2
    assert run_cli(["fix", "/nonexistent/file"]) == 2
    stdin("!!\n")
    assert run_cli(["fix", "-"]) == 2
    assert "offset" in capsys.readouterr().err
    assert run_cli(["fix", "--cap", "0", "-"]) == 2


def test_verify_exit_codes(capsys):
    assert run_cli(["verify", "--theorem", "corona", "--g1-max", "3", "--g2-max", "3", "--json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 28 and all(json.loads(l)["verdict"] != "violated" for l in lines)
    assert run_cli(["verify", "--theorem", "composition_slices"]) == 1
