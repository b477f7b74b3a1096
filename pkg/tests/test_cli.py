import io
import json

import pytest

from app.cli import run

SEVENTH_IDENTITY = "2*cos(2*pi/7) == (1/3)*(-1+2*sqrt(7)*cos((1/3)*arctan(3*sqrt(3))))"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_seq_a198636():
    code, out, _ = invoke("seq", "a198636", "--terms", "7")
    assert code == 0
    assert out == "3 5 13 38 117 370 1186\n"


def test_seq_a198636_bfile_and_check():
    code, out, _ = invoke("seq", "a198636", "--terms", "3", "--bfile")
    assert (code, out) == (0, "0 3\n1 5\n2 13\n")
    code, out, _ = invoke("seq", "a198636", "--terms", "8", "--check")
    assert code == 0
    assert "jefferey: pass" in out


def test_seq_trace_and_walks():
    code, out, _ = invoke("seq", "trace", "--h", "-1", "--k", "2", "--terms", "4")
    assert code == 0
    assert out.splitlines()[0] == "3 5 13 38"
    assert "x^3 - 5*x^2 + 6*x - 1" in out
    code, out, _ = invoke("seq", "walks", "--n", "6", "--terms", "5", "--json")
    assert json.loads(out)["terms"] == ["6", "0", "10", "0", "26"]


def test_roots_scp_json():
    code, out, _ = invoke("roots", "scp", "--h", "-1", "--digits", "40", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["kind"] == "roots.scp"
    assert document["digits"] == 40
    assert [z[:9] for z in document["zeros"]] == ["1.2469796", "-0.445041", "-1.801937"]
    assert all(len(z.split(".")[1]) == 40 for z in document["zeros"])
    assert sorted(document["branches"]) == [0, 2, 4]
    assert list(document) == ["kind", "inputs", "digits", "zeros", "branches", "residual"]


def test_json_output_is_byte_stable():
    argv = ("periods", "13", "--digits", "30", "--json")
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_roots_scp_explain():
    code, out, _ = invoke("roots", "scp", "--h", "1", "--explain")
    assert code == 0
    assert "tau(h) = h^2 + 3h + 9 = 13" in out


def test_roots_rcp_through_alpha():
    code, out, _ = invoke("roots", "rcp", "--alpha", "2", "--s", "1", "--json")
    document = json.loads(out)
    assert code == 0
    assert document["checks"]["h"] == "-3/2"
    assert document["zeros"][0].startswith("2.000")


def test_roots_rcp_explain_shows_sign_discrepancy():
    code, out, _ = invoke("roots", "rcp", "--h=-1", "--s=-1", "--explain")
    assert code == 0
    assert "are not zeros of rho(h, s, x)" in out


def test_roots_cubic_and_oracle():
    code, out, _ = invoke("roots", "cubic", "--a2", "-6", "--a1", "11", "--a0", "-6", "--digits", "20", "--json")
    assert code == 0
    assert json.loads(out)["zeros"] == ["3.00000000000000000000", "2.00000000000000000000", "1.00000000000000000000"]
    code, out, _ = invoke("roots", "cubic", "--a2", "1", "--a1", "-2", "--a0", "-1", "--oracle")
    assert code == 0
    assert "1.2469796037" in out


def test_roots_witula():
    code, out, _ = invoke("roots", "witula", "--gamma", "3", "--r", "8", "--json")
    document = json.loads(out)
    assert code == 0
    assert document["checks"]["is_rcp"] == "true"
    assert [z.split(".")[0] for z in document["zeros"]] == ["4", "1", "-2"]


def test_periods_and_deltas():
    code, out, _ = invoke("periods", "13", "--json")
    document = json.loads(out)
    assert code == 0
    assert document["cosets"] == [[1, 5, 8, 12], [2, 3, 10, 11], [4, 6, 7, 9]]
    assert document["checks"]["h"] == "1"
    code, out, _ = invoke("deltas", "7")
    assert code == 0
    assert "x^3 - 7x + 7" in out


def test_shanks_primes():
    code, out, _ = invoke("shanks-primes", "--limit", "139", "--bfile")
    assert code == 0
    assert out.splitlines() == ["1 7", "2 13", "3 19", "4 37", "5 79", "6 97", "7 139"]
    code, out, _ = invoke("shanks-primes", "--limit", "20")
    assert out.splitlines() == ["-1 7", "1 13", "2 19"]


def test_minpoly():
    code, out, _ = invoke("minpoly", "--h", "1")
    assert code == 0
    assert "x^3 + x^2 - 4*x + 1" in out
    code, out, _ = invoke("minpoly", "--h=-1", "--explain")
    assert code == 0
    assert "does not agree" in out


def test_identities():
    assert invoke("identity", "ramanujan", "--h=-1", "--s=-1")[0] == 0
    assert invoke("identity", "extended", "--alpha", "pi^3", "--s", "1")[0] == 0
    assert invoke("identity", "gauss", "--h", "2")[0] == 0
    code, out, _ = invoke("identity", "named", "sqrt2", "--json")
    assert code == 0
    assert json.loads(out)["report"]["verdict"] == "pass"
    code, out, _ = invoke("identity", "named", "--list")
    assert "cos2pi7:" in out


def test_verify_pass_and_fail():
    assert invoke("verify", SEVENTH_IDENTITY, "--digits", "50")[0] == 0
    code, out, _ = invoke("verify", "pi == 22/7", "--digits", "4")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("verify", "cos( == 1"),
        ("identity", "named", "nope"),
        ("minpoly", "--h", "3"),
        ("periods", "15"),
        ("roots", "rcp", "--h", "1", "--s", "0"),
        ("roots", "scp", "--h", "1", "--digits", "0"),
        ("oeis-check", "Axx", "--offline"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, err = invoke(*argv)
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "sqrt(-1) == 1"),
        ("roots", "cubic", "--a2", "0", "--a1", "1", "--a0", "1"),
    ],
)
def test_evaluation_errors_exit_3(argv):
    code, _, err = invoke(*argv)
    assert code == 3
    assert "error:" in err


def test_oeis_check_offline(tmp_path):
    code, out, _ = invoke("oeis-check", "A198636", "--offline", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "status: pass" in out
    code, out, _ = invoke("oeis-check", "A005471", "--limit", "1000", "--offline", "--cache-dir", str(tmp_path), "--json")
    assert code == 0
    assert json.loads(out)["terms"][:4] == ["7", "13", "19", "37"]


def test_oeis_check_detects_mismatch(tmp_path):
    (tmp_path / "b198636.txt").write_text("0 3\n1 5\n2 14\n")
    code, out, _ = invoke("oeis-check", "A198636", "--offline", "--cache-dir", str(tmp_path))
    assert code == 1
    assert "n=2: expected 14, computed 13" in out
