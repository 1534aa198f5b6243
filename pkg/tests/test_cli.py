import json

import pytest

from ringcodes import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qr_emit(capsys, tmp_path):
    code, out, _ = run(capsys, "qr", "--p", "7", "--variant", "extended")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# binary [24,12] self-dual=True Type II"
    assert lines[-1] == "1 1 1 1 1 1 1 1"
    code, out, _ = run(capsys, "qr", "--p", "7", "--variant", "bsqr", "-q")
    assert len(out.splitlines()) == 11 and set(out.replace("\n", "")) <= {"0", "1"}


def test_qr_bad_prime(capsys):
    code, _, err = run(capsys, "qr", "--p", "5")
    assert code == 2 and "2 is not a QR mod 5" in err


def test_wenum_and_mindist_on_files(capsys, tmp_path):
    run(capsys, "qr", "--p", "7", "--variant", "extended", "-q")
    path = tmp_path / "g.txt"
    cli.main(["qr", "--p", "7", "--variant", "extended", "-q", "--emit", "gray"])
    path.write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "wenum", str(path))
    assert json.loads(out)["counts"]["8"] == 759
    code, out, _ = run(capsys, "mindist", str(path), "--method", "bz")
    assert json.loads(out)["d"] == 8


def test_r_code_file_and_extend(capsys, tmp_path):
    src = tmp_path / "c11.txt"
    cli.main(["qdc", "--p", "11", "--r", "0", "--s", "u^2", "--t", "1+u^2", "-q"])
    src.write_text(capsys.readouterr().out)
    assert len(src.read_text().splitlines()) == 11
    code, out, _ = run(capsys, "extend", "--method", "idext", "--input", str(src),
                       "--x", "u^2 0 u^2 0 u^2 u^2 0 0 u+u^2 u u", "--c", "1", "--emit", "gray", "-q")
    assert code == 0
    ext = tmp_path / "e.txt"
    ext.write_text(out)
    code, out, _ = run(capsys, "wenum", str(ext), "--upto", "16", "--form", "w72_2")
    assert json.loads(out)["params"] == {"form": "w72_2", "gamma": 0, "beta": 335}


def test_extend_error_exit(capsys, tmp_path):
    src = tmp_path / "c.txt"
    src.write_text("1 0 0 0 u^2 1+u^2\n0 1 0 1+u^2 0 u^2\n0 0 1 u^2 1+u^2 0\n")
    code, _, err = run(capsys, "extend", "--method", "idext", "--input", str(src), "--x", "1 0 0")
    assert code == 2 and "1 + n v^-2" in err


def test_qdc_border(capsys):
    code, out, _ = run(capsys, "qdc", "--p", "11", "--r", "u^2", "--s", "1", "--t", "1+u^2", "--border", "0,1,1")
    assert out.splitlines()[0] == "# binary [72,36] self-dual=True Type II"


def test_verify_exit_status(capsys):
    code, out, _ = run(capsys, "verify", "--table", "8")
    assert code == 0 and "6 rows, 0 failing cells" in out
    code, out, _ = run(capsys, "verify", "--table", "1")
    assert code == 1 and "FAIL Lee distance" in out


def test_search_subcommand(capsys, tmp_path):
    store = tmp_path / "s.jsonl"
    code, out, _ = run(capsys, "search", "--base", "gray(C11(0,u^2,1+u^2))", "--trials", "2", "--seed", "1",
                       "--target", "68,34,12", "--store", str(store), "--x", "1366E7855836D5F97")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["params"] == {"beta": 111, "gamma": 0}
    assert store.read_text().count("\n") == 1
