import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from gradedtensor.cli import run

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("UPDATE_GOLDEN") == "1"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_original_counterexample():
    code, out, _ = call("verify", "--claim", "original-first", "--n", "4", "--deg", "a=1", "--field", "f2")
    assert code == 1
    assert out.splitlines()[0] == "FAILS: residual = a(x)a(x)1(x)a"
    assert "known counterexample" in out


def test_verify_corrected_holds():
    code, out, _ = call("verify", "--claim", "corrected-first", "--n", "4", "--deg", "a=1", "--field", "f2")
    assert code == 0
    assert out.splitlines()[0] == "HOLDS"


def test_verify_utf8():
    code, out, _ = call("verify", "--claim", "original-first", "--n", "4", "--field", "q", "--utf8")
    assert code == 1
    assert out.splitlines()[0] == "FAILS: residual = -a⊗a⊗1⊗a"


def test_sweep_second():
    code, out, _ = call("sweep", "--claim", "second", "--n", "2..8")
    assert code == 0
    rows = [line for line in out.splitlines()[1:-1]]
    assert len(rows) == 7 * 4 * 3
    assert all(" HOLDS " in r and r.endswith("ok") for r in rows)
    assert out.splitlines()[-1] == "84/84 cells hold"


def test_sweep_original_labels_expected_failures():
    code, out, _ = call("sweep", "--claim", "original-first", "--n", "2..5", "--fields", "f2")
    assert code == 1
    assert out.count("FAILS (expected)") == 2 * 2
    assert out.count("HOLDS") == 2 * 2


def test_sweep_json_parallel_matches_serial():
    args = ["sweep", "--claim", "corrected-first", "second", "--n", "2..5", "--json"]
    serial = call(*args)
    parallel = call(*args, "--jobs", "2")
    assert serial == parallel
    data = json.loads(serial[1])
    assert len(data) == 4 * (2 + 4) * 3
    assert all(c["holds"] and c["certificate_ok"] for c in data)


def test_expand_and_reduce():
    code, out, _ = call("expand", "--ctx", "n=2;gens=a:1", "a_1 - a_2")
    assert (code, out) == (0, "a(x)1 - 1(x)a\n")
    code, out, _ = call("reduce", "--ctx", "n=4;field=f3;gens=a:1", "(a_1-a_2)*(a_1-a_3)*(a_1-a_4)",
                        "--ideal", "[a^2,1,1,1]", "[a,a,a,1]")
    assert code == 0
    assert out == "-a(x)a(x)1(x)a + a(x)1(x)a(x)a - 1(x)a(x)a(x)a\n"


def test_congruent_exit_codes():
    ctx = "n=4;field=f2;gens=a:1"
    code, out, _ = call("congruent", "--ctx", ctx, "a_1*a_1", "0", "--ideal", "[a^2,1,1,1]")
    assert (code, out) == (0, "CONGRUENT\n")
    code, out, _ = call("congruent", "--ctx", ctx, "[a,a,1,a]", "0", "--ideal", "[a^2,1,1,1]", "[a,a,a,1]")
    assert code == 1
    assert out == "NOT CONGRUENT: reduced difference = a(x)a(x)1(x)a\n"


@pytest.mark.parametrize("argv, code, prefix", [
    ([], 2, "error: usage:"),
    (["frobnicate"], 2, "error: usage:"),
    (["expand", "a_1"], 2, "error: usage:"),
    (["expand", "--ctx", "n=2;field=f4", "a_1"], 2, "error: usage:"),
    (["expand", "--ctx", "n=2;gens=a:1", "a_1 +"], 3, "error: parse: line 1, column 6:"),
    (["expand", "--ctx", "n=2", "b_1"], 3, "error: parse:"),
    (["expand", "--ctx", "n=3", "[a,1]"], 3, "error: parse:"),
    (["reduce", "--ctx", "n=2;gens=a:1", "a_1", "--ideal", "a_1 + a_2"], 2, "error: usage:"),
    (["verify", "--claim", "third", "--n", "4"], 2, "error: usage:"),
    (["verify", "--claim", "second", "--n", "4", "--deg", "a=1"], 2, "error: usage:"),
    (["verify", "--claim", "corrected-first", "--n", "1"], 2, "error: usage:"),
    (["verify", "--claim", "corrected-first", "--n", "4", "--field", "f9"], 2, "error: usage:"),
    (["verify", "--claim", "corrected-first", "--n", "4", "--deg", "a=x"], 2, "error: usage:"),
    (["sweep", "--n", "5..2"], 2, "error: usage:"),
    (["expand", "--ctx", "n=2", "--ascii", "--utf8", "a_1"], 2, "error: usage:"),
])
def test_error_paths(argv, code, prefix):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    lines = err.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith(prefix)


def test_degree_zero_warns():
    code, _, err = call("verify", "--claim", "corrected-first", "--n", "3", "--deg", "a=0")
    assert code == 0
    assert err == "warning: generator a has degree 0\n"


GOLDEN_CASES = {
    "verify_original_n4_f2.txt": ["verify", "--claim", "original-first", "--n", "4", "--deg", "a=1", "--field", "f2"],
    "verify_original_n6_q.txt": ["verify", "--claim", "original-first", "--n", "6", "--deg", "a=1", "--field", "q"],
    "verify_original_n4_q.json": ["verify", "--claim", "original-first", "--n", "4", "--field", "q", "--json"],
    "verify_second_n3_f3.txt": ["verify", "--claim", "second", "--n", "3", "--deg", "a=1,b=2", "--field", "f3"],
    "certificate_corrected_n3_f2.txt": ["certificate", "--claim", "corrected-first", "--n", "3", "--field", "f2"],
    "certificate_second_n2_q.json": ["certificate", "--claim", "second", "--n", "2", "--deg", "a=1,b=2", "--json"],
    "expand_chain4_f2.json": ["expand", "--ctx", "n=4;field=f2;gens=a:1", "--json",
                              "(a_1-a_2)*(a_1-a_3)*(a_1-a_4)"],
    "sweep_corrected_2_5.txt": ["sweep", "--claim", "corrected-first", "--n", "2..5"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, out, _ = call(*GOLDEN_CASES[name])
    path = GOLDEN / name
    if UPDATE:
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gradedtensor", "verify", "--claim", "original-first", "--n", "4",
                           "--deg", "a=1", "--field", "f2"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout.startswith("FAILS: residual = a(x)a(x)1(x)a\n")
