import json
import subprocess
import sys

import pytest

from powerful_aps.cli import main
from powerful_aps.witness import witness_from_values


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--bound", "100")
    assert code == 0
    assert out.split() == "1 4 8 9 16 25 27 32 36 49 64 72 81 100".split()


def test_enumerate_count_only(capsys):
    code, out = run(capsys, "enumerate", "--bound", "1000000", "--count-only")
    assert (code, out.strip()) == (0, "2027")


def test_search_ap_text(capsys):
    code, out = run(capsys, "search", "ap", "--limit", "1000000")
    assert code == 0
    assert "d = 316  N = 729000  ratio = 0.4263  [primitive]" in out
    assert "3 progressions" in out


def test_search_ap_json(capsys):
    code, out = run(capsys, "search", "ap", "--limit", "1000000", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 2 and obj["m"] == 3
    assert [r["d"] for r in obj["rows"]] == ["316", "36", "363"]


def test_search_ap_csv(capsys):
    code, out = run(capsys, "search", "ap", "--limit", "1000000", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "d,N,d_factored,N_factored,ratio"
    assert "316,729000,2^2*79,2^3*3^6*5^3,0.4263" in out


def test_search_large_d(capsys):
    code, out = run(capsys, "search", "large-d", "--limit", "2000000", "--first-max", "10000")
    assert code == 0
    assert "36 progressions" in out


def test_search_mind(capsys):
    code, out = run(capsys, "search", "mind", "--terms", "3", "--max-d", "30", "--max-n", "100")
    assert code == 0
    assert "d = 24  N = 1" in out


def test_search_mind_empty_box(capsys):
    code, out = run(capsys, "search", "mind", "--terms", "3", "--max-d", "23", "--max-n", "1000")
    assert code == 0
    assert out.startswith("no 3-term progression")


def test_construct_ap3_squarefull(capsys):
    code, out = run(capsys, "construct", "ap3-squarefull", "--a", "2", "--b", "1")
    assert code == 0
    w = json.loads(out)
    assert w["N"] == "1" and w["d"] == "24"


def test_construct_ap3_squarefull_bad_params(capsys):
    code, out = run(capsys, "construct", "ap3-squarefull", "--a", "3", "--b", "1")
    assert code == 1
    assert not json.loads(out)["ok"]


def test_construct_ap3_cubefull(capsys):
    code, out = run(capsys, "construct", "ap3-cubefull")
    assert code == 0
    assert "generation 0" in out
    w = json.loads(out[out.index("{"):])
    assert w["k"] == 3 and w["N"] == "4913"


def test_construct_family(capsys):
    code, out = run(capsys, "construct", "family", "--m", "4", "--j", "1")
    assert code == 0
    assert "N has 48 digits" in out
    assert "0.275945932335" in out


def test_construct_family_j0(capsys):
    code, out = run(capsys, "construct", "family", "--j", "0")
    assert code == 1
    assert "j >= 1" in json.loads(out)["reason"]


def test_construct_ap4_elliptic_precondition(capsys):
    code, out = run(capsys, "construct", "ap4-elliptic", "--n", "405")
    assert code == 2
    assert "404 mod 1168" in json.loads(out)["reason"]


def test_construct_small_d(capsys):
    code, out = run(capsys, "construct", "small-d", "--max-k", "10")
    assert code == 0
    assert "a_5 = 62" in out and "d = 7484" in out


def test_ec_psi(capsys):
    code, out = run(capsys, "ec", "psi", "--n", "4")
    assert code == 0
    assert "psi_4 = -19111064818388639416320" in out


def test_ec_psi_modular(capsys):
    code, out = run(capsys, "ec", "psi", "--n", "50", "--mod", "1000000007")
    assert code == 0


def test_ec_scan_periods(capsys):
    code, out = run(capsys, "ec", "scan-periods", "--mod", "73")
    assert code == 0
    assert "psi period   2628" in out
    assert "residues with psi*phi = 2*omega, omega != 0: [39]" in out


def test_ec_valuations(capsys):
    code, out = run(capsys, "ec", "valuations", "--max", "30")
    assert code == 0
    assert "MISMATCH" not in out


def test_ec_verify_intro(capsys):
    code, out = run(capsys, "ec", "verify-intro")
    assert code == 0
    assert "N: 1126 digits" in out
    assert "FAIL" not in out


def test_identity(capsys):
    code, out = run(capsys, "identity", "--ell", "3", "--eval", "5", "1")
    assert code == 0
    assert "F(5, 1) = 13" in out
    assert "matches" in out


def test_diag_exponents(capsys):
    code, out = run(capsys, "diag", "exponents", "--m", "5", "--k", "2")
    assert code == 0
    assert "e_gcd = 2/7" in out


def test_diag_exponents_exceptional(capsys):
    code, out = run(capsys, "diag", "exponents", "--m", "3", "--k", "2")
    assert code == 0
    assert "(exceptional pair)" in out


def test_diag_radicals(capsys):
    code, out = run(capsys, "diag", "radicals", "--limit", "5000")
    assert code == 0
    assert "all hold" in out


def test_diag_abc_and_verify_roundtrip(capsys, tmp_path):
    w = witness_from_values([499392, 509796, 520200, 530604])
    path = tmp_path / "w.json"
    path.write_text(w.to_json())

    code, out = run(capsys, "diag", "abc", "--json", str(path), "--quality")
    assert code == 0
    assert "l = 3, t = 10404" in out
    assert "quality = 1.3715615219" in out

    code, out = run(capsys, "verify", "--json", str(path))
    assert code == 0
    assert json.loads(out) == {"ok": True, "k": 2, "m": 4, "source": "searched"}


def test_verify_rejects_corrupt_witness(capsys, tmp_path):
    w = witness_from_values([1, 25, 49])
    obj = w.to_json_obj()
    obj["d"] = "25"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out = run(capsys, "verify", "--json", str(path))
    assert code == 1
    assert not json.loads(out)["ok"]


def test_verify_rejects_malformed_json(capsys, tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{\"k\": 2}")
    code, out = run(capsys, "verify", "--json", str(path))
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["search", "ap"])  # --limit missing
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "powerful_aps.cli", "enumerate", "--bound", "100", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "14"
