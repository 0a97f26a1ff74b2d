import subprocess
import sys

import pytest

from detrep.cli import main
from detrep.textio import load


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def coord_file(tmp_path):
    path = tmp_path / "coord.txt"
    path.write_text("detrep-instance 1\nr 1\ng 4\nfield q\nlinmat A\n"
                    "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\nend\n")
    return str(path)


def test_det_prints_quadric(coord_file, capsys):
    code, out, _ = run(["det", coord_file], capsys)
    assert code == 0 and out == "x1*x4 - x2*x3\n"


def test_frobenius_round_trip(tmp_path, capsys):
    inst = tmp_path / "inst.txt"
    cert = tmp_path / "cert.txt"
    assert main(["gen", "frobenius", "--r", "2", "--transposed", "--seed", "4", "--out", str(inst)]) == 0
    assert main(["frobenius", str(inst), str(inst), "--out", str(cert)]) == 0
    assert load(str(cert)).get("flag", "transposed") is True
    code, out, _ = run(["verify", str(inst), str(inst), str(cert)], capsys)
    assert code == 0 and out == "verified\n"


def test_frobenius_refutes_random_pair(tmp_path, capsys):
    inst = tmp_path / "pair.txt"
    assert main(["gen", "pair", "--r", "1", "--seed", "3", "--out", str(inst)]) == 0
    code, out, err = run(["frobenius", str(inst), str(inst)], capsys)
    assert code == 1
    assert out.startswith("not-equivalent")
    assert "witness" in err


def test_prime_field_round_trip(tmp_path):
    inst = tmp_path / "inst.txt"
    assert main(["gen", "frobenius", "--r", "1", "--field", "p:101", "--out", str(inst)]) == 0
    assert main(["frobenius", str(inst), str(inst), "--field", "p:101", "--out", str(tmp_path / "c")]) == 0
    assert main(["gen", "frobenius", "--r", "2", "--field", "p:3"]) == 2


def test_curve_commands(tmp_path, capsys):
    inst = tmp_path / "conic.txt"
    assert main(["gen", "curve", "--r", "1", "--g", "3", "--degree", "2", "--out", str(inst)]) == 0
    code, out, _ = run(["rank-profile", str(inst)], capsys)
    assert code == 0 and out == "generic-rank 1\n"
    code, out, _ = run(["reconstruct", str(inst)], capsys)
    assert code == 0
    assert "kernel-line rank 1 degree-invariant 0\n  [t]\n  [-1]\n" in out
    assert out.endswith("disambiguation Undecided\n")
    code, out, _ = run(["restrict", str(inst)], capsys)
    assert code == 0 and "upmat restricted 2 2" in out


def test_reconstruct_with_reference(tmp_path, capsys):
    inst = tmp_path / "curve.txt"
    assert main(["gen", "curve", "--r", "1", "--g", "4", "--degree", "3", "--out", str(inst)]) == 0
    text = inst.read_text().replace("linmat Lambda", "linmat B")
    ref = tmp_path / "ref.txt"
    ref.write_text(text)
    code, out, _ = run(["reconstruct", str(inst), "--reference", str(ref)], capsys)
    assert code == 0 and out.endswith("disambiguation Plain\n")


def test_tangent_cone_and_check_generic(coord_file, tmp_path, capsys):
    poly = tmp_path / "f.txt"
    poly.write_text("detrep-instance 1\nr 1\ng 2\nfield q\npoly f\n1 0 3\n1 2 0\nend\n")
    code, out, _ = run(["tangent-cone", str(poly)], capsys)
    assert code == 0 and out == "multiplicity 2\nleading-form x1^2\n"
    code, out, _ = run(["tangent-cone", str(poly), "--point", "1,1"], capsys)
    assert code == 1 and out.startswith("multiplicity 0")
    code, out, _ = run(["check-generic", coord_file], capsys)
    assert code == 0 and "genericity-probe pass" in out


def test_exit_code_two_on_bad_input(tmp_path, capsys):
    assert run(["det", str(tmp_path / "missing.txt")], capsys)[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("not a file\n")
    assert run(["det", str(bad)], capsys)[0] == 2
    assert run(["no-such-command"], capsys)[0] == 2
    assert run(["gen", "frobenius", "--r", "1", "--g", "3"], capsys)[0] == 2


def test_generation_is_deterministic(capsys):
    first = run(["gen", "frobenius", "--r", "2", "--seed", "17"], capsys)[1]
    second = run(["gen", "frobenius", "--r", "2", "--seed", "17"], capsys)[1]
    other = run(["gen", "frobenius", "--r", "2", "--seed", "18"], capsys)[1]
    assert first == second != other


def test_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "detrep", "selftest", "--trials", "2"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("PASS") == 6
