import io
import json
import subprocess
import sys

import pytest

from w22quant.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_latex():
    code, out = run("compute", "--expr", "Delta(W(2))", "--twist", "W", "--format", "latex")
    assert code == 0
    assert out.strip() == r"W_{2}\otimes(1-\mathcal{X}t)^{2} + 1\otimes W_{2}"


def test_compute_json():
    code, out = run("--order", "2", "compute", "--expr", "S(L(1))", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "algebra" and data["series"] and data["order"] == 2


def test_expand():
    code, out = run("expand", "--expr", "S(W(2))", "--twist", "W", "--degree", "1")
    assert (code, out.strip()) == (0, "-2 W_1 W_2")
    code, out = run("expand", "--expr", "L(1)", "--degree", "2")
    assert (code, out.strip()) == (0, "0")
    code, _ = run("expand", "--expr", "S(L(1))", "--order", "2", "--degree", "3")
    assert code == 2


def test_verify_single_suite():
    code, out = run("verify", "--suite", "2.4", "--twist", "W", "--n0", "1", "--order", "3")
    assert code == 0 and "PASS" in out


def test_verify_all_order_zero():
    code, _ = run("verify", "--suite", "all", "--order", "0")
    assert code == 0


def test_verify_json_report():
    code, out = run("verify", "--suite", "2.2", "--order", "2", "--report", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass"
    assert data["reports"][0]["suite"] == "2.2"


def test_verify_failure_exit_code():
    from w22quant.mutations import mutated
    with mutated("dropped_t2"):
        code, out = run("verify", "--suite", "2.4", "--order", "3")
    assert code == 1 and "first failure" in out


@pytest.mark.parametrize("argv", [
    ["compute", "--expr", "L("],
    ["compute", "--expr", "foo(1)"],
    ["compute", "--expr", "Delta0(L(1)) ox L(1)"],
    ["compute"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "2.6", "--twist", "L"],
    ["--n0", "0", "verify"],
    ["bogus"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_flags_before_or_after_subcommand():
    assert run("--order", "2", "--twist", "W", "verify", "--suite", "2.6")[0] == 0
    code, out = run("verify", "--suite", "2.6", "--twist", "W", "--order", "2")
    assert code == 0 and "N=2" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "w22quant", "compute", "--expr", "eps(L(5))"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0"
