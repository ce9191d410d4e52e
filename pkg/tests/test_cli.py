import json
import subprocess
import sys

import pytest

from logdiv.cli import run

from conftest import CORPUS, ROOT

GOLDEN = ROOT / "tests" / "golden"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_braid_json(capsys):
    code, out, _ = call(capsys, "verify", CORPUS / "braid_a3.json", "--json")
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["csm"] == rep["chern"] == [1, -3, 2]
    assert rep["verdict"] == "pass"


def test_qh_test_example(capsys):
    code, out, _ = call(capsys, "qh-test", CORPUS / "example23_chart_z.txt", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["quasihomogeneous"] is False
    assert data["milnor"] == 16 and data["tjurina"] == 15
    code, out, _ = call(capsys, "qh-test", CORPUS / "example23_sextic.json", "--weights", "1,1,1")
    assert code == 0 and out.strip().endswith("true")


def test_help_exits_zero(capsys):
    assert run(["verify", "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_usage_and_parse_errors(capsys, tmp_path):
    assert run([]) == 2
    assert run(["nonsense"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "f": "x^^2"}')
    assert run(["exponents", str(bad)]) == 2
    assert "position" in capsys.readouterr().err
    assert run(["verify", str(CORPUS / "nonreduced_x2y.json")]) == 2


def test_exit_codes(capsys, tmp_path):
    assert run(["exponents", str(CORPUS / "four_generic_lines.json")]) == 1
    assert run(["chern", str(CORPUS / "four_generic_lines.json")]) == 1
    assert run(["exponents", str(CORPUS / "braid_a3.json"), "--degree-bound", "2"]) == 3
    curve = tmp_path / "curve_p3.json"
    curve.write_text('{"n": 3, "f": "x*y*z*w + x^4"}')
    assert run(["csm", str(curve)]) == 3
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["csm", "braid_a3.json"], "1 - 3 h + 2 h^2"),
        (["chern", "two_lines.json"], "1 + h"),
        (["exponents", "braid_a3.json"], "1 2 3"),
        (["charpoly", "braid_a3.json"], "t^3 - 6t^2 + 11t - 6"),
        (["milnor", "germs/x5y5.txt"], "16"),
        (["tjurina", "example23_sextic.json", "--point", "0,0,1"], "15"),
        (["check-free", "braid_a3.json"], "free, exponents [1, 2, 3]"),
        (["lattice", "boolean_p2.json"], "dim 1: 3, dim 0: 3"),
        (["bertini", "boolean_p2.json"], "10/10 equal"),
        (["section-check", "boolean_p3.json"], "verdict: pass"),
        (["section-check", "braid_a3.json", "--mode", "chern"], "verdict: pass"),
        (["section-check", "braid_a3.json", "--kind", "preservation"], "verdict: preserved"),
    ],
)
def test_subcommands(capsys, argv, expected):
    code, out, _ = call(capsys, argv[0], CORPUS / argv[1], *argv[2:])
    assert code == 0
    assert expected in out


def test_order_flag_gives_same_answers(capsys):
    a = call(capsys, "verify", CORPUS / "cuspidal_cubic_flex.json", "--json")[1]
    b = call(capsys, "verify", CORPUS / "cuspidal_cubic_flex.json", "--json", "--order", "lex")[1]
    ra, rb = json.loads(a)["reports"][0], json.loads(b)["reports"][0]
    assert ra == rb


GOLDEN_FILES = sorted(GOLDEN.glob("verify_*.json"))


@pytest.mark.parametrize("golden", GOLDEN_FILES, ids=[g.stem for g in GOLDEN_FILES])
def test_golden_reports(capsys, golden):
    name = golden.stem[len("verify_"):]
    code, out, _ = call(capsys, "verify", CORPUS / f"{name}.json", "--json")
    assert out == golden.read_text()


def test_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "logdiv", "section-check", str(CORPUS / "braid_a3.json"),
           "--mode", "chern", "--seed", "11", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b'"seed": 11' in a


def test_corpus_exit_code(capsys):
    paths = sorted(CORPUS.glob("*.json"))
    assert run(["verify", *map(str, paths)]) == 0
    assert run(["verify", "--jobs", "2", *map(str, paths[:4])]) == 0
    capsys.readouterr()
