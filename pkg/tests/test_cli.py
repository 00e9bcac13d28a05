import io
import json
import subprocess
import sys
from importlib.resources import files

import pytest

from nf_forge.cli import main

CORPUS = files("nf_forge").joinpath("corpus")


def run(argv, stdin=""):
    """Run the CLI in-process and return (exit code, stdout)."""
    out = io.StringIO()
    old_in, old_out = sys.stdin, sys.stdout
    sys.stdin, sys.stdout = io.StringIO(stdin), out
    try:
        code = main(argv)
    finally:
        sys.stdin, sys.stdout = old_in, old_out
    return code, out.getvalue()


def test_stratify_corpora():
    code, out = run(["stratify", str(CORPUS / "paper_definitions.nf"),
                     str(CORPUS / "negatives.nf")])
    assert code == 0
    assert out.startswith("name\texpected\tgot")


def test_stratify_stdin_and_expect():
    assert run(["stratify", "--expect", "FAIL", "-"], "x in x\n")[0] == 0
    assert run(["stratify", "-"], "x in x\n")[0] == 1
    code, out = run(["stratify", "--format", "json", "-"], "x in y\n")
    assert code == 0
    assert json.loads(out)["records"][0]["name"] == "stdin:1"
    assert run(["stratify", "--wrt", "x", "--expect", "PASS", "-"],
               "x in FIN -> ssc(x) in FIN\n")[0] == 0


def test_stratify_errors():
    assert run(["stratify", "-"], "x in (\n")[0] == 2
    assert run(["stratify", "/nonexistent.nf"])[0] == 2


def test_eval():
    code, out = run(["eval", "exp2(two)"])
    assert code == 0
    assert out.strip() == "level 3: C(level=3, size=4) = four"
    code, out = run(["eval", "succ(succ(succ(succ(zero))))"])
    assert code == 0 and "OVERFLOW" in out
    assert run(["eval", "x"])[0] == 2
    assert run(["eval", "T(T(T(zero)))"])[0] == 3


def test_check_exit_codes_and_json_selection():
    code, out = run(["check", "--n", "3", "--select", "lemma:exp*", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["checks"] and all(c["id"].startswith("lemma:exp") for c in data["checks"])
    assert data["universe"] == {"n": 3, "L": 2}
    assert run(["check", "--select", "nope"])[0] == 2
    assert run(["check", "--n", "1"])[0] == 0
    assert run(["check", "--n", "3", "--select", "lemma:dividebytwo"])[0] == 1


def test_check_audit():
    code, out = run(["check", "--audit"])
    assert code == 0 and "lemma:sscusc" in out


def test_universe_stats():
    code, out = run(["universe-stats", "--n", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["level_sizes"] == [3, 8, 256]
    assert run(["universe-stats", "--n", "5"])[0] == 3
    assert run(["universe-stats", "--n", "-1"])[0] == 2


def test_bad_arguments():
    assert run([])[0] == 2
    assert run(["check", "--n", "three"])[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nf_forge.cli", "eval", "T(zero)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("level 3:")
