import json
import subprocess
import sys

import pytest

from chromix.cli import main


@pytest.fixture
def ex1_csv(tmp_path):
    path = tmp_path / "ex1.csv"
    path.write_text("x,color\n0,0\n1,1\n2,0\n")
    return path


def test_compute_writes_all_formats(ex1_csv, tmp_path, capsys):
    out = tmp_path / "pack"
    assert main(["compute", str(ex1_csv), "--format", "json,csv,svg", "--out", str(out)]) == 0
    doc = json.loads((tmp_path / "pack.json").read_text())
    assert doc["meta"]["cutoff"] == "2"
    assert doc["diagrams"]["kernel"][0]["points"][0]["birth"] == "1/4"
    assert (tmp_path / "pack.csv").exists() and (tmp_path / "pack.svg").exists()
    assert "kernel" in capsys.readouterr().out


def test_output_is_byte_identical(ex1_csv, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for prefix in (a, b):
        assert main(["compute", str(ex1_csv), "--format", "json,csv,svg", "--out", str(prefix)]) == 0
    for ext in ("json", "csv", "svg"):
        assert (tmp_path / f"a.{ext}").read_bytes() == (tmp_path / f"b.{ext}").read_bytes()


def test_verify_exit_codes(ex1_csv):
    assert main(["verify", str(ex1_csv)]) == 0
    assert main(["verify", str(ex1_csv), "--corrupt"]) == 1


def test_input_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("0,0\n1,1,1\n")
    assert main(["compute", str(bad)]) == 2
    assert main(["compute", str(tmp_path / "absent.csv")]) == 2
    assert main(["compute", "--gen", "uniform-random", "--param", "n=2", "--param", "n_colors=3"]) == 2


def test_oracle_guard_exits_2():
    assert main(["verify", "--gen", "uniform-random", "--param", "n=40", "--max-oracle-simplices", "10"]) == 2


def test_genericity_exit_3(tmp_path):
    sq = tmp_path / "square.csv"
    sq.write_text("0,0,0\n1,0,0\n0,1,0\n1,1,0\n")
    assert main(["compute", str(sq), "--out", str(tmp_path / "sq")]) == 3


def test_generate_and_triple(tmp_path, capsys):
    pts = tmp_path / "pts.csv"
    assert main(["generate", "uniform-random", "--param", "n=15", "--seed", "2", "--out", str(pts)]) == 0
    assert main(["triple", str(pts), "--out", str(tmp_path / "tri")]) == 0
    doc = json.loads((tmp_path / "tri.json").read_text())
    assert len(doc["diagrams"]) == 18
    assert "shared diagrams consistent: True" in capsys.readouterr().out


def test_patterns_and_oracle_check(tmp_path):
    assert main(["patterns", "--gen", "uniform-random", "--param", "n=12", "--out", str(tmp_path / "pat")]) == 0
    assert main(["oracle-check", "--gen", "uniform-random", "--param", "n=10", "--param", "n_colors=2"]) == 0


def test_module_entry_point(ex1_csv, tmp_path):
    r = subprocess.run([sys.executable, "-m", "chromix", "compute", str(ex1_csv), "--out", str(tmp_path / "m")],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
