import io
import subprocess
import sys
from pathlib import Path

import pytest

from hetg2.cli import main

DATA = Path(__file__).resolve().parents[1] / "src" / "hetg2" / "data"
PROBLEMS = sorted((DATA / "problems").glob("*.txt"))


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue().splitlines()


@pytest.mark.parametrize("path", PROBLEMS, ids=lambda p: p.stem)
def test_golden_problems_verify(path):
    code, lines = run("--format", "lines", "het", "verify", path)
    assert code == 0
    assert "CHECK bianchi PASS" in lines and "CHECK lambda PASS" in lines
    assert lines[-1] == "RESULT PASS"


@pytest.mark.parametrize("path", sorted((DATA / "invalid").glob("*.txt")), ids=lambda p: p.stem)
def test_invalid_inputs_exit_2(path):
    assert run("het", "verify", path)[0] == 2


def test_failing_problem_exits_1(tmp_path):
    text = (DATA / "problems" / "h7_lambda_half.txt").read_text().replace("eps = 1/2, 3/2", "eps = 1/2, -3/2")
    f = tmp_path / "bad.txt"
    f.write_text(text)
    code, lines = run("het", "verify", f)
    assert code == 1
    assert any(x.startswith("CHECK bianchi FAIL residual=") for x in lines)
    assert lines[-1] == "result: FAIL"


def test_torsion_lines():
    code, lines = run("torsion", "(0,0,0,e13,0,e15,-e35)", "--format", "lines")
    assert code == 0
    assert "TORSION tau1 = 1/4 e2" in lines
    assert "FLAG coclosed false" in lines
    code, lines = run("torsion", "h7")
    assert "lambda = 1/2" in lines and "g2t: yes" in lines


def test_format_before_subcommand_is_kept():
    a = run("--format", "lines", "torsion", "h7")
    b = run("torsion", "h7", "--format", "lines")
    assert a == b and a[1][0].startswith("TORSION ")


def test_catalog():
    code, lines = run("--format", "lines", "catalog", "--fingerprints")
    assert code == 0
    assert "ALGEBRA h7 1 (0,0,0,0,0,0,e12+e34+e56)" in lines
    assert sum(x.startswith("FINGERPRINT ") for x in lines) == sum(x.startswith("ALGEBRA ") for x in lines)


def test_search_evidence():
    code, lines = run("het", "search", DATA / "specs" / "all_negative.txt", "--evidence")
    assert code == 0
    assert lines[0] == "EVIDENCE bounded search, not a proof"
    assert any(x.startswith("GATE all eps negative") for x in lines)


def test_search_lines_deterministic(tmp_path):
    spec = tmp_path / "s.txt"
    spec.write_text("[search]\nreduction = n1\nk = 1\nbound = 2\nlambda = 0\neps = 1\nalpha_rank = 4\n"
                    "nontrivial = true\nmax_solutions = 5\n")
    a = run("--format", "lines", "het", "search", spec)
    assert a == run("--format", "lines", "het", "search", spec)
    assert sum(x.startswith("SOLUTION ") for x in a[1]) == 5


def test_bundle_check():
    code, lines = run("bundle", "check", DATA / "problems" / "n3_family_1.txt", "--words", "2")
    assert code == 0 and lines[-1] == "RESULT PASS"
    assert lines[0].startswith("BUNDLE F1 PASS")


def test_usage_errors():
    assert run()[0] == 2
    assert run("torsion")[0] == 2
    assert run("het", "verify", "/nonexistent/file.txt")[0] == 2
    assert run("torsion", "(0,0,e12)")[0] == 2


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "hetg2.cli", "torsion", "h7", "--format", "lines"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and "TORSION lambda = 1/2" in proc.stdout
