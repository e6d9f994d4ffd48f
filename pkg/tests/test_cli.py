import json
import subprocess
import sys

import pytest

from gcover.cli import main
from gcover.divisor_algebra import DivisorClass, canonical_class


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_kodaira_genus_13(capsys):
    r = run_json(capsys, "kodaira", "--genus", "13")
    assert r["verdict"] == "general_type"
    assert run_json(capsys, "kodaira", "--genus", "11")["verdict"] == "inconclusive"


def test_mu2_cover_count(capsys):
    r = run_json(capsys, "covers", "count", "--group", "mu2", "--genus", "2", "--image", "full")
    assert r["count"] == 15
    assert "elapsed_ms" not in r
    r = run_json(capsys, "covers", "count", "--group", "mu2", "--genus", "2", "--image", "full",
                 "--timing")
    assert r["elapsed_ms"] >= 0


@pytest.mark.parametrize("method", ["brute_force", "frobenius", "moebius", "auto"])
def test_count_methods_agree(capsys, method):
    r = run_json(capsys, "covers", "count", "--group", "S3", "--genus", "1", "--marks", "c2,c2",
                 "--method", method)
    ref = run_json(capsys, "covers", "count", "--group", "S3", "--genus", "1", "--marks",
                   "c2,c2", "--method", "frobenius")
    assert r["count"] == ref["count"]


def test_canonical_round_trip(capsys):
    r = run_json(capsys, "canonical", "--genus", "4")
    assert r["coeffs"]["lambda"] == "13/1"
    assert DivisorClass.from_json(r) == canonical_class(4)


def test_pullback_round_trip(capsys):
    r = run_json(capsys, "pullback", "--genus", "7", "--i", "0", "--what", "delta")
    c = DivisorClass.from_json(r)
    assert (c["delta_prime_0"], c["delta_0_c2"], c["delta_0_c3"]) == (1, 2, 3)


def test_pencil_check(capsys):
    r = run_json(capsys, "pencil", "check", "--i", "3", "--a", "13", "--b0p", "2", "--b0c2", "3")
    assert r["passes"] is True
    assert r["bound_b_prime"] == "260/7" and r["bound_b_c3"] == "38"


def test_koszul_and_grr(capsys):
    r = run_json(capsys, "koszul", "class", "--i", "6")
    assert r["prefactor"] == 4 * 6 * 1716
    r = run_json(capsys, "grr", "ch1", "--group", "S3", "--rep", "R", "--genus", "13",
                 "--substitute-kappa")
    assert r["kappa1_substituted"]["coeffs"] == {"delta_0_c2": "-1/4", "delta_0_c3": "-2/3",
                                                 "lambda": "2/1"}


def test_elliptic_tail(capsys):
    r = run_json(capsys, "elliptic-tail", "orbits", "--group", "S3", "--image", "N", "--aut", "6")
    assert sorted(len(o["members"]) if "members" in o else o["size"]
                  for o in r["orbits"]) == [1, 3]
    r = run_json(capsys, "elliptic-tail", "genus")
    assert r["genus"] == 0


def test_boundary_list(capsys):
    r = run_json(capsys, "boundary", "list", "--group", "S3", "--genus", "4")
    names = {lab["name"] for lab in r}
    assert "Delta_{0,c2}^{T,T}" in names and "Delta_{0,c2}^{S3,T}" not in names
    r = run_json(capsys, "boundary", "list", "--group", "S3", "--genus", "4", "--include-empty")
    assert "Delta_{0,c2}^{S3,T}" in {lab["name"] for lab in r}


def test_eigen(capsys):
    r = run_json(capsys, "eigen", "--group", "S3", "--rep", "R", "--element", "(12)")
    assert r["multiplicities"] == [1, 1] and r["age"] == "1/2"


def test_group_from_file(capsys, tmp_path):
    path = tmp_path / "z3.txt"
    path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n0 e\n1 a\n2 b\n")
    r = run_json(capsys, "covers", "count", "--group", str(path), "--genus", "1")
    assert r["count"] == 9


def test_byte_identical_output(capsys):
    argv = ("boundary", "list", "--group", "S3", "--genus", "5")
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    assert a == b


def test_computation_error_exit_code(capsys):
    code, out = run(capsys, "covers", "count", "--group", "S3", "--genus", "3", "--method",
                    "brute_force", "--cutoff", "10")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "SearchTooLarge" and err["witness"]["required"] == 6 ** 6


def test_env_cutoff(capsys, monkeypatch):
    monkeypatch.setenv("GCOVER_CUTOFF", "10")
    code, _ = run(capsys, "covers", "count", "--group", "S3", "--genus", "3", "--method",
                  "brute_force")
    assert code == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["covers", "count", "--group", "S3"])
    assert info.value.code == 2
    code, out = run(capsys, "covers", "count", "--group", "S7", "--genus", "1")
    assert code == 2 and json.loads(out)["error"]["code"] == "UsageError"


def test_table_output(capsys):
    code, out = run(capsys, "pencil", "check", "--i", "2", "--a", "13", "--b0p", "2", "--b0c2",
                    "3", "--output", "table")
    assert code == 0
    assert any(line.startswith("bound_b_prime") and line.rstrip().endswith("33")
               for line in out.splitlines())


def test_selftest(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    r = json.loads(out)
    assert r["passed"] is True
    assert [c["id"] for c in r["criteria"]] == list(range(1, 12))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gcover", "canonical", "--genus", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["genus"] == 2
