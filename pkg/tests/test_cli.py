import subprocess
import sys

import pytest

import bondagelab.cli as cli
from bondagelab.cli import main
from bondagelab.generators import generate, stacked_triangulation
from bondagelab.plg import read_plg, write_plg


@pytest.fixture
def plg(tmp_path):
    def make(kind, *params):
        p = tmp_path / f"{kind}{''.join(map(str, params))}.plg"
        write_plg(generate(kind, *params), p)
        return str(p)
    return make


def test_gamma_i(plg, capsys):
    assert main(["gamma-i", plg("k4")]) == 0
    assert capsys.readouterr().out == "gamma_i = 1\nwitness = 0\n"


def test_bondage_i(plg, capsys):
    assert main(["bondage-i", plg("k4"), "--limit", "3"]) == 0
    assert capsys.readouterr().out.startswith("bondage_i = 2 ")
    assert main(["bondage-i", plg("octahedron"), "--limit", "2"]) == 0
    assert "bondage_i > 2" in capsys.readouterr().out


def test_find_config(plg, capsys):
    assert main(["find-config", plg("icosahedron"), "--first"]) == 0
    assert capsys.readouterr().out == "config a center=0-1 I= faces=3,3\n"
    assert main(["find-config", plg("wheel", 10)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "config d_i center=0 I=2,4,6,8,10 faces=3,3,3,3,3,3,3,3,3,3" in out


def test_find_config_none_on_star_is_not_falsification(plg, capsys):
    assert main(["find-config", plg("star", 10)]) == 0
    assert capsys.readouterr().out == "no configuration\n"


def test_discharge(plg, capsys):
    assert main(["discharge", plg("icosahedron")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "total -12/1" in out
    assert sum(line.startswith("neg v") for line in out) == 12
    assert main(["discharge", plg("k4"), "--scheme", "balanced"]) == 0
    assert "total -8/1" in capsys.readouterr().out
    assert main(["discharge", plg("wheel", 10), "--ledger"]) == 0
    assert "transfer R1 v0 -> v1 1/1" in capsys.readouterr().out


def test_certify(plg, capsys):
    assert main(["certify", plg("icosahedron")]) == 0
    assert capsys.readouterr().out.startswith("certificate kind=a ")


def test_gen(tmp_path, capsys):
    out = tmp_path / "p.plg"
    assert main(["gen", "prism", "5", "-o", str(out)]) == 0
    assert read_plg(out).n == 10
    assert main(["gen", "stacked_triangulation", "9", "2"]) == 0
    assert capsys.readouterr().out.startswith("planegraph 9\n")


def test_size_caps(tmp_path, capsys):
    p = tmp_path / "big.plg"
    write_plg(stacked_triangulation(21, 0), p)
    assert main(["certify", str(p)]) == 1
    assert "--force" in capsys.readouterr().err
    assert main(["bondage-i", str(p)]) == 1
    assert main(["gamma-i", str(p)]) == 0
    assert main(["certify", str(p), "--force"]) == 0


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["gamma-i"], ["gen", "nope"], ["gen", "prism"], ["gamma-i", "/no/such/file"],
    ["bondage-i", "x.plg", "--limit", "many"], ["corpus", "--jobs", "0"],
])
def test_usage_errors_exit_one(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_bad_plg(tmp_path, capsys):
    p = tmp_path / "bad.plg"
    p.write_text("planegraph 2\nv 0: 1\nv 1:\n")
    assert main(["gamma-i", str(p)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_corpus_report(tmp_path, capsys):
    out = tmp_path / "r.txt"
    assert main(["corpus", "--seed", "1", "--count", "12", "--max-n", "14", "-o", str(out)]) == 0
    text = out.read_text()
    lines = text.splitlines()
    assert len([x for x in lines if x.startswith("graph=")]) == 12
    assert "falsified 0" in lines and "certified 12" in lines
    assert main(["corpus", "--seed", "1", "--count", "12", "--max-n", "14"]) == 0
    assert capsys.readouterr().out == text


def test_corpus_parallel_identical(monkeypatch, capsys):
    main(["corpus", "--seed", "4", "--count", "10", "--max-n", "14"])
    serial = capsys.readouterr().out
    monkeypatch.setenv("BONDAGELAB_JOBS", "2")
    main(["corpus", "--seed", "4", "--count", "10", "--max-n", "14"])
    assert capsys.readouterr().out == serial


def test_corpus_skips_large_and_timing(capsys):
    assert main(["corpus", "--seed", "2", "--count", "6", "--max-n", "40", "--timing"]) == 0
    out = capsys.readouterr().out
    assert " time=" in out
    for line in out.splitlines():
        if line.startswith("graph="):
            n = int(line.split()[1].split("=")[1])
            assert ("cert=skipped" in line) == (n > 20)


def test_falsification_exit_code(monkeypatch, plg, capsys):
    path = plg("icosahedron")
    monkeypatch.setattr(cli, "find_configuration", lambda g: None)
    assert main(["corpus", "--count", "3", "--max-n", "12"]) == 2
    assert "falsified 3" in capsys.readouterr().out
    monkeypatch.setattr(cli, "certify", lambda g: (_ for _ in ()).throw(cli.NoConfiguration("none")))
    assert main(["certify", path]) == 2


def test_module_entry_point(plg):
    r = subprocess.run([sys.executable, "-m", "bondagelab.cli", "gamma-i", plg("cube")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("gamma_i = 2")
