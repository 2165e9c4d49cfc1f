from __future__ import annotations

import json
import subprocess
import sys

import pytest

from greenhv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "9", "2")
    assert code == 0 and out.strip() == "9_(2) = C(4,2) + C(3,1)"


@pytest.mark.parametrize(
    "kind,a,b,value",
    [("green", 14, 4, 4), ("green", 18, 5, 4), ("macaulay", 9, 2, 16), ("mnz-h2", 10, 4, 9)],
)
def test_bound(capsys, kind, a, b, value):
    code, out, _ = run(capsys, "bound", "--kind", kind, str(a), str(b))
    assert code == 0 and out.strip() == str(value)


def test_check(capsys):
    code, out, _ = run(capsys, "--json", "check", "1,10,9,10,1")
    data = json.loads(out)
    assert code == 0
    assert data["o_sequence"] and data["symmetric"] and data["mnz_h2_bound"] == 9


def test_analyze_exit_codes_and_certificate(capsys, tmp_path):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "analyze", "--char", "not-two", "1,10,9,10,1", "--certificate", str(cert))
    assert code == 0 and out.startswith("NOT GORENSTEIN")
    assert "LinearSpaceRigidity" in out
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 0 and out.startswith("VALID")
    code, out, _ = run(capsys, "analyze", "--char", "not-two", "--witnesses", "1,11,10,11,1")
    assert code == 2 and "b = (1, 7, 7, 1)" in out


def test_verify_rejects_tampering(capsys, tmp_path):
    cert = tmp_path / "c.json"
    run(capsys, "analyze", "--char", "zero", "1,14,13,13,14,1", "--certificate", str(cert))
    data = json.loads(cert.read_text())
    data["steps"][0]["after"][1] += 1
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 1 and out.startswith("INVALID")


def test_wlp(capsys):
    code, out, _ = run(capsys, "wlp", "--socle", "level", "--char", "0", "1,4,7,11,15")
    assert code == 0 and "W4" in out and "through degree 3" in out
    code, out, _ = run(capsys, "wlp", "--char", "exactly:2", "1,3,3,1")
    assert code == 2 and out.startswith("WLP UNKNOWN")


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--codim", "10", "--socle-degree", "4", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["counts"]["below-mnz-bound"] == 3 and data["counts"]["not-gorenstein"] == 1


def test_oracle_commands(capsys):
    code, out, _ = run(capsys, "oracle", "algebra", "--ideal", "x^2,y^2,z^2", "--vars", "3", "--char", "2", "--wlp")
    assert code == 0 and "WLP fails (exhaustive over F_2)" in out
    code, out, _ = run(capsys, "oracle", "algebra", "--ideal", "x^2,xy,y^3", "--vars", "2", "--json")
    assert json.loads(out)["hilbert"] == [1, 2, 1]
    code, out, _ = run(capsys, "oracle", "lex", "9", "2", "5")
    assert "lex growth: 16" in out
    code, out, _ = run(capsys, "oracle", "charp", "-p", "3", "-d", "3", "--samples", "5")
    assert code == 0 and out.strip().endswith("all match")
    code, out, _ = run(capsys, "oracle", "split", "--ideal", "x^2,y^2,z^2", "--var", "z")
    assert "c = (1, 2, 1, 0)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "1,x,3"],
        ["check", "2,3"],
        ["expand", "0", "3"],
        ["analyze", "--char", "exactly:4", "1,3,3,1"],
        ["wlp", "--socle", "weird", "1,3,3,1"],
        ["bound", "--kind", "nope", "1", "2"],
        ["oracle", "algebra", "--ideal", "xy", "--vars", "2"],
        ["oracle", "algebra", "--ideal", "x^2", "--vars", "1", "--char", "4"],
        ["verify", "/nonexistent/file.json"],
    ],
)
def test_input_errors_exit_one(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_argparse_errors_use_exit_one():
    with pytest.raises(SystemExit) as info:
        main(["bound", "--kind", "nope", "1", "2"])
    assert info.value.code == 1


def test_output_is_deterministic(capsys):
    outs = [run(capsys, "--json", "analyze", "--char", "zero", "1,18,17,20,17,18,1")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "greenhv", "bound", "--kind", "green", "14", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
