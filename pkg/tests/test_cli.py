"""Command-line behaviour and exit codes."""
from __future__ import annotations

import io
import json
import subprocess
import sys

from hermseries.cli import EXIT_CONTRACT, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from hermseries.errors import ContractViolation
from hermseries.registry import IdentityRecord, Registry, validate_report_dict
from hermseries.series import TSeries


def run(argv, registry=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, registry=registry, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_expand_hermite():
    code, out, _ = run(["expand", "hermite", "4"])
    assert code == EXIT_OK and out.strip() == "16*x^4 - 48*x^2 + 12"


def test_seq_bell():
    code, out, _ = run(["seq", "bell", "10"])
    assert out.split() == ["1", "1", "2", "5", "15", "52", "203", "877", "4140", "21147"]


def test_seq_stirling_triangle():
    _, out, _ = run(["seq", "stirling2", "4"])
    assert out.splitlines()[3].split("\t") == ["0", "1", "3", "1"]


def test_transform_binomial(tmp_path):
    f = tmp_path / "seq.txt"
    f.write_text("# constant sequence\n1\n1\n1\n1\n")
    code, out, _ = run(["transform", "binomial", "--input", str(f)])
    assert code == EXIT_OK and out.split() == ["1", "0", "0", "0"]


def test_transform_euler_and_hermite(tmp_path):
    f = tmp_path / "seq.txt"
    f.write_text("1/2\n-3\n")
    assert run(["transform", "euler", "--input", str(f)])[1].split() == ["1/2", "7/2"]
    assert run(["transform", "hermite", "--input", str(f)])[1].split() == ["1/2", "-7/2"]


def test_transform_rejects_bad_input(tmp_path):
    f = tmp_path / "seq.txt"
    f.write_text("1\nabc\n")
    code, _, err = run(["transform", "binomial", "--input", str(f)])
    assert code == EXIT_USAGE and "line 2" in err
    assert run(["transform", "binomial", "--input", str(tmp_path / "missing")])[0] == EXIT_USAGE


def test_verify_json_single(registry):
    code, out, _ = run(["verify", "--ids", "EQ1", "--order", "8", "--format", "json"], registry)
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["reports"]) == 1
    validate_report_dict(data["reports"][0])
    assert data["reports"][0]["status"] == "pass"


def test_verify_text_and_json_agree(registry):
    ids = "EQ12,EQ19,EQ63,EQ95"
    _, text, _ = run(["verify", "--ids", ids, "-n", "6"], registry)
    _, js, _ = run(["verify", "--ids", ids, "-n", "6", "--format", "json"], registry)
    text_pass = {ln.split()[1] for ln in text.splitlines() if ln.startswith("PASS")}
    json_pass = {d["identity"] for d in json.loads(js)["reports"] if d["status"] == "pass"}
    assert text_pass == json_pass == set(ids.split(","))


def test_unknown_id_is_a_usage_error(registry):
    code, out, err = run(["verify", "--ids", "EQ1,NOPE"], registry)
    assert code == EXIT_USAGE and out == "" and "NOPE" in err


def test_parse_errors_exit_2():
    assert run(["verify", "--order", "-3"])[0] == EXIT_USAGE
    assert run(["expand", "chebyshev", "3"])[0] == EXIT_USAGE
    assert run(["frobnicate"])[0] == EXIT_USAGE


def _registry_with(lhs, rhs):
    return Registry([IdentityRecord("X1", "(1)", "gf", lhs, rhs)])


def test_verification_failure_exit_1():
    reg = _registry_with(lambda o: TSeries.one(o), lambda o: TSeries.zero(o))
    code, out, _ = run(["verify"], reg)
    assert code == EXIT_FAIL and "FAIL" in out


def test_contract_violation_exit_3():
    def broken(order):
        raise ContractViolation("builder misuse")

    code, _, err = run(["verify"], _registry_with(broken, broken))
    assert code == EXIT_CONTRACT and "builder misuse" in err


def test_wrong_order_builder_is_a_contract_violation():
    reg = _registry_with(lambda o: TSeries.one(o + 1), lambda o: TSeries.one(o))
    assert run(["verify"], reg)[0] == EXIT_CONTRACT


def test_eval_and_accel(registry):
    code, out, _ = run(["eval", "--ids", "EQ40-MEHLER", "--point", "0.3,0,0.5,0.1", "-n", "40"], registry)
    assert code == EXIT_OK
    header, row = out.strip().splitlines()
    assert float(row.split(",")[-1]) < 1e-10
    code, out, _ = run(["accel", "--ids", "EQ19", "--point", "0.5,0,0,0.2", "--format", "json"], registry)
    rec = json.loads(out)[0]
    assert rec["lhs_converged"] and rec["rhs_converged"]
    assert run(["eval", "--point", "0,0,0,0.9"], registry)[0] == EXIT_USAGE
    assert run(["eval", "--point", "a,b"], registry)[0] == EXIT_USAGE


def test_list(registry):
    code, out, _ = run(["list", "--format", "json"], registry)
    ids = [r["identity"] for r in json.loads(out)]
    assert ids == registry.ids()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hermseries", "expand", "hermite", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "4*x^2 - 2"
