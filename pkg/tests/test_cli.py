import json

import pytest

from kuelsh.cli import main

Q2B_13_11 = """\
field gf:2
vertex 1 2
arrow alpha 1 1
arrow beta 1 2
arrow gamma 2 1
arrow eta 2 2
rel beta.eta = alpha.beta
rel eta.gamma = gamma.alpha
rel alpha^2 = beta.gamma + beta.gamma.alpha
rel gamma.beta = eta^2
rel alpha.alpha.beta = 0
rel gamma.alpha.alpha = 0
loewy 4
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_analyze_center_dim(capsys):
    code, d = run_json(capsys, "analyze", "--family", "2B", "--p", "2", "--field", "gf:2",
                       "--k", "1", "--s", "3", "--a", "1", "--c", "0")
    assert d["center_dim"] == 6
    assert code in (0, 2) and (code == 2) == (d["expectation"]["status"] == "mismatch")


def test_analyze_three_simples_rational(capsys):
    code, d = run_json(capsys, "analyze", "--family", "3A", "--p", "2", "--field", "rat:2", "--d", "t")
    # computed value; the closed form claims 0 and the report flags it
    assert d["t1perp_mod_reynolds_dim"] == 2
    assert code == 2


def test_analyze_text_exit_zero_on_match(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "2B", "--field", "gf:2", "--k", "2", "--s", "4")
    assert code == 0
    assert "expectation: match" in out


@pytest.mark.parametrize("argv", [
    ["analyze", "--family", "2B", "--p", "2", "--field", "gf:2", "--k", "1", "--s", "2"],
    ["analyze", "--family", "2B", "--p", "3", "--field", "gf:2", "--k", "1", "--s", "3"],
    ["analyze", "--family", "2B", "--field", "gf:2", "--k", "1"],
    ["analyze", "--family", "3A", "--field", "gf:4", "--d", "1"],
    ["analyze", "--family", "3A", "--field", "gf:4", "--d", "g", "--k", "1"],
    ["analyze", "--family", "2B", "--field", "gf:4", "--k", "1", "--s", "3", "--a", "g+"],
    ["analyze", "--family", "2B", "--field", "gf:6", "--k", "1", "--s", "3"],
])
def test_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("kuelsh: error:") and out == ""


def test_invalid_params_named(capsys):
    _, _, err = run(capsys, "analyze", "--family", "2B", "--field", "gf:2", "--k", "1", "--s", "2")
    assert "InvalidParams" in err


def test_nmax_env_and_flag(capsys, monkeypatch):
    base = ["analyze", "--family", "2B", "--field", "gf:2", "--k", "1", "--s", "4"]
    monkeypatch.setenv("KUELSH_NMAX", "1")
    _, d = run_json(capsys, *base)
    assert len(d["ladder"]) == 2
    _, d = run_json(capsys, *base, "--nmax", "3")
    assert len(d["ladder"]) == 4
    monkeypatch.setenv("KUELSH_NMAX", "x")
    assert run(capsys, *base)[0] == 1


def test_json_byte_identical(capsys):
    argv = ["analyze", "--family", "2B", "--field", "rat:2", "--k", "1", "--s", "4", "--a", "t", "--c", "t",
            "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_custom_truncated_polynomial(capsys, tmp_path):
    f = tmp_path / "x3.q"
    f.write_text("field gf:2\nvertex 1\narrow x 1 1\nrel x^3 = 0\nloewy 3\n")
    code, d = run_json(capsys, "custom", "--quiver", str(f))
    assert code == 0
    assert d["center_dim"] == 3
    assert d["expectation"]["status"] == "uncovered"
    # commutative, so T_1 = <x^2> and T_1^perp = <x, x^2>
    assert [s["t_perp_dim"] for s in d["ladder"]][:2] == [3, 2]


def test_custom_field_flag(capsys, tmp_path):
    f = tmp_path / "x2.q"
    f.write_text("vertex 1\narrow x 1 1\nrel x^2 = 0\nloewy 2\n")
    code, d = run_json(capsys, "custom", "--quiver", str(f), "--field", "gf:4")
    assert code == 0 and d["field"].startswith("GF(2^2)")


def test_custom_malformed_file(capsys, tmp_path):
    f = tmp_path / "bad.q"
    f.write_text("field gf:2\nvertex 1\narrow x 1\n")
    code, out, err = run(capsys, "custom", "--quiver", str(f))
    assert code == 1
    assert "line 3, column" in err


def test_custom_missing_file(capsys, tmp_path):
    assert run(capsys, "custom", "--quiver", str(tmp_path / "nope.q"))[0] == 1


def test_manual_presentation_matches_family(capsys, tmp_path):
    f = tmp_path / "q2b.q"
    f.write_text(Q2B_13_11)
    _, manual = run_json(capsys, "custom", "--quiver", str(f))
    _, fam = run_json(capsys, "analyze", "--family", "2B", "--field", "gf:2",
                      "--k", "1", "--s", "3", "--a", "1", "--c", "1")
    for key in ("params", "expectation", "exceptional"):
        manual.pop(key)
        fam.pop(key)
    assert manual == fam


def test_verify_paper_defaults_to_small_grid(capsys):
    code, out, _ = run(capsys, "verify-paper")
    lines = out.strip().splitlines()
    # 4 (k,s) x (gf:2: 2 instances, gf:4: 4 instances) + 2 three-simples instances
    assert len(lines) == 4 * 6 + 2 + 1
    passed, failed = int(lines[-1].split()[0]), int(lines[-1].split()[2])
    assert passed + failed == 26
    assert code == (2 if failed else 0)
    assert all(line.split()[0] in ("PASS", "FAIL", "SKIP") for line in lines[:-1])


def test_verify_paper_output_is_sorted(capsys):
    out = run(capsys, "verify-paper")[1].splitlines()[:-1]
    par = run(capsys, "verify-paper", "--jobs", "2")[1].splitlines()[:-1]
    assert out == par


def test_verify_paper_mutation_fails(capsys):
    code, out, _ = run(capsys, "verify-paper", "--mutate-c")
    assert code == 2
    assert "FAIL" in out
