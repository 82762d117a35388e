import io
import json
import subprocess
import sys

import pytest

from omega_point.cli import main

KEYS = {"command", "inputs", "status", "result", "timings", "resource"}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv) + ["--json"], out=out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert set(record) == KEYS
    return code, record


def test_classify():
    code, rec = run("classify", "-a", "0", "-b", "1")
    assert code == 0 and rec["result"]["region"] == "R1" and rec["result"]["conditions"] == [1]
    code, rec = run("classify", "-a", "-3", "-b", "-2")
    assert rec["result"]["region"] == "R2_touch_below" and rec["result"]["conditions"] == [2, 3]
    assert rec["result"]["sign_4a3_27b2"] == 0 and rec["result"]["sign_b"] == -1
    code, rec = run("classify", "-a", "0", "-b", "0")
    assert rec["result"]["region"] == "R0_degenerate" and "S0" in rec["result"]["note"]


def test_certify():
    code, rec = run("certify", "--A", "1,4", "--B", "0,1,2,9")
    assert code == 0 and rec["result"]["chi"] == 1 and rec["result"]["nonempty"] is True
    code, rec = run("certify", "--A", "3", "--B", "5")
    assert code == 1 and rec["result"]["chi"] == 0 and rec["status"] == "false"
    code, rec = run("certify", "--A", "1", "--B", "1", "--M", "1", "--N", "0")
    assert code == 2 and rec["status"] == "error"
    code, rec = run("certify", "--A", "-1,2", "--B", "2")
    assert code == 0 and rec["result"]["M"] == -1


def test_certify_guard_precedence(monkeypatch):
    code, _ = run("certify", "--A", "0", "--B", "600")
    assert code == 3
    code, _ = run("certify", "--A", "0", "--B", "600", "--max-width", "600")
    assert code == 0 or code == 1
    monkeypatch.setenv("OMEGA_POINT_MAX_WIDTH", "5")
    assert run("certify", "--A", "0", "--B", "6")[0] == 3
    assert run("certify", "--A", "0", "--B", "6", "--max-width", "6")[0] == 1


def test_eval():
    code, rec = run("eval", "-a", "0", "-b", "1", "-n", "1", "--I", "2", "--J", "3")
    assert code == 0 and rec["result"]["condition"] == 1 and rec["result"]["satisfied"]
    code, rec = run("eval", "-a", "-3", "-b", "-2", "-n", "1", "--I", "1", "--J", "1")
    assert code == 0 and rec["result"]["condition"] == 2 and rec["result"]["lattice_solution"] == [-1, 0]
    code, rec = run("eval", "-a", "0", "-b", "3", "-n", "1", "--I", "2", "--J", "2")
    assert code == 1 and rec["status"] == "false"


def test_eval_all_guarded_exits_3():
    code, rec = run("eval", "-a", "0", "-b", "1", "-n", "4", "--I", "12", "--J", "12")
    assert code == 3


def test_eval_bounded_branch_note():
    code, rec = run("eval", "-a", "-4", "-b", "1", "-n", "1", "--I", "2", "--J", "2")
    assert "J does not apply" in rec["result"]["note"]


def test_search():
    code, rec = run("search", "-a", "0", "-b", "-2")
    assert code == 0 and rec["status"] == "found"
    assert rec["result"]["point"]["x"] == "3" and rec["result"]["point"]["y"] == "5"
    code, rec = run("search", "-a", "1", "-b", "1")
    assert code == 0 and rec["result"]["point"]["y"] == "1"
    code, rec = run("search", "-a", "0", "-b", "1")
    assert rec["result"]["supplement"]["x_axis_points"][0]["x"] == "-1"
    code, rec = run("search", "-a", "0", "-b", "0")
    assert code == 0 and "S0" in rec["result"]["family"]


def test_search_inconclusive():
    code, rec = run("search", "-a", "0", "-b", "6", "--max-n", "3")
    assert code == 1 and rec["status"] == "inconclusive" and rec["result"]["point"] is None


def test_search_all_guarded_exits_3():
    code, rec = run("search", "-a", "0", "-b", "6", "--max-n", "1", "--max-I", "1", "--max-J", "1", "--max-width", "1")
    assert code == 3


@pytest.mark.parametrize("x, y, code", [
    ("2", "3", 0),
    ("1/2", "3/2", 1),
])
def test_verify(x, y, code):
    assert run("verify", "-a", "0", "-b", "1", "--x", x, "--y", y)[0] == code


def test_verify_negative_and_malformed():
    assert run("verify", "-a", "0", "-b", "-2", "--x", "3", "--y", "-5")[0] == 0
    assert run("verify", "-a", "0", "-b", "-2", "--x", "-1/1", "--y", "1")[0] == 1
    assert main(["verify", "-a", "0", "-b", "1", "--x", "1/0", "--y", "1"]) == 2
    assert main(["verify", "-a", "0", "-b", "1", "--x", "abc", "--y", "1"]) == 2
    assert main(["classify", "-a", "zero", "-b", "1"]) == 2


def test_bench():
    code, rec = run("bench", "--max-width", "64")
    rows = rec["result"]["rows"]
    assert code == 0 and [r["width"] for r in rows] == [8, 16, 24, 32, 40, 48, 56, 64]
    bits = [r["peak_bits"] for r in rows]
    assert all(x < y for x, y in zip(bits, bits[1:]))
    assert run("bench", "--max-width", "100000")[0] == 3


def test_human_output():
    out = io.StringIO()
    assert main(["search", "-a", "0", "-b", "-2"], out=out) == 0
    assert out.getvalue().startswith("search: found")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "omega_point", "classify", "-a", "-4", "-b", "1", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["region"] == "R4_three_roots"


def test_usage_error_exit_code():
    assert main(["nosuch"]) == 2
    assert main(["eval", "-a", "0", "-b", "1", "-n", "0", "--I", "1", "--J", "1"]) == 2
