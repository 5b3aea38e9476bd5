import csv
import io
import json
import subprocess
import sys

import pytest

from malmsten.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    code, out, _ = run_cli(capsys, "eval", "delta", "--n", "2")
    assert code == 0 and "-0.8187801401720233052975489816" in out
    code, out, _ = run_cli(capsys, "eval", "lambda", "--n", "1")
    assert code == 0 and "1.166243616123275120553537825873" in out
    code, out, _ = run_cli(capsys, "--output", "json", "eval", "chi", "--n", "1")
    assert code == 0 and json.loads(out)["value"] == "0"


def test_eval_reports_provenance_and_precision(capsys):
    code, out, _ = run_cli(capsys, "eval", "Delta", "--n", "3", "--a", "2", "--b", "1/3", "--prec", "25",
                           "--output", "json")
    rec = json.loads(out)
    assert code == 0 and rec["precision"] == 25 and rec["provenance"]
    assert len(rec["value"].lstrip("-").replace(".", "")) == 25


def test_eval_domain_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "chi", "--n", "0")
    assert code == 2 and "error" in err
    code, _, _ = run_cli(capsys, "eval", "Delta", "--n", "2", "--a", "-1")
    assert code == 2


def test_quad_matches_eval(capsys):
    _, qout, _ = run_cli(capsys, "--output", "json", "quad", "Delta", "--n", "1", "--form", "lnln01", "--prec", "30")
    _, eout, _ = run_cli(capsys, "--output", "json", "eval", "Delta", "--n", "1", "--prec", "30")
    q, e = json.loads(qout), json.loads(eout)
    assert q["converged"] is True and q["evaluations"] > 0
    assert abs(float(q["value"]) - float(e["value"])) < 1e-12
    assert q["value"][:20] == e["value"][:20]


def test_quad_kappa2_is_euler_gamma(capsys):
    code, out, _ = run_cli(capsys, "quad", "kappa2", "--y", "0.5", "--output", "json")
    assert code == 0 and json.loads(out)["value"].startswith("0.57721566490153286")


def test_quad_list_integrands(capsys):
    code, out, _ = run_cli(capsys, "quad", "--list-integrands", "--output", "json")
    names = [r["name"] for r in json.loads(out)]
    assert code == 0 and names[:4] == ["Delta", "lambda", "delta", "chi"] and "gamma_rep_5" in names


def test_quad_non_convergence_exit_3(capsys, monkeypatch):
    from mpmath import mpf

    import malmsten.cli as cli
    from malmsten.quadrature import QuadResult

    monkeypatch.setattr(cli, "oracle_named", lambda *a, **k: QuadResult(mpf("0.25"), mpf("1e-3"), 99, False))
    code, out, _ = run_cli(capsys, "quad", "youpart", "--a", "1", "--y", "1/4", "--output", "json")
    rec = json.loads(out)
    assert code == 3 and rec["converged"] is False and rec["value"] == "0.25"


def test_quad_usage_errors(capsys):
    assert run_cli(capsys, "quad", "nonexistent")[0] == 2
    assert run_cli(capsys, "quad", "chi")[0] == 2
    assert run_cli(capsys, "quad", "kappa", "--y", "1", "--form", "arctan")[0] == 2


def test_table_fex(capsys):
    code, out, _ = run_cli(capsys, "table", "fex", "--max-n", "6", "--prec", "30", "--output", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["quantity", "closed_form", "oracle", "abs_diff"]
    assert len(rows) == 1 + 18
    assert all(len(r) == 4 for r in rows)
    assert all(float(r[3]) < 1e-12 for r in rows[1:])


def test_table_scex_has_footnote(capsys):
    code, out, _ = run_cli(capsys, "table", "scex", "--prec", "30", "--output", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 7
    assert all(float(r["abs_diff"]) < 1e-12 for r in rows[:6])
    assert rows[6]["quantity"].startswith("footnote") and float(rows[6]["abs_diff"]) > 1e-3


def test_table_rejects_large_n(capsys):
    assert run_cli(capsys, "table", "fex", "--max-n", "7")[0] == 2


def test_poly_examples(capsys):
    assert run_cli(capsys, "poly", "sgsp", "--k", "2", "--m", "2")[1].strip() == "x^2 - 3x + 2"
    assert run_cli(capsys, "poly", "sgsp", "--k", "0", "--m", "7")[1].strip() == "1"
    assert run_cli(capsys, "poly", "gsp", "--k", "0", "--n", "2")[1].strip() == "1 - z"
    code, out, _ = run_cli(capsys, "poly", "sgsp", "--k", "1", "--m", "3", "--output", "json")
    assert json.loads(out)["coefficients"] == ["-6", "3"]


def test_poly_index_violation(capsys):
    assert run_cli(capsys, "poly", "sgsp", "--k", "5", "--m", "2")[0] == 2
    assert run_cli(capsys, "poly", "gsp", "--k", "2", "--n", "2")[0] == 2


def test_constants(capsys):
    code, out, _ = run_cli(capsys, "constants", "catalan", "euler_gamma", "--prec", "50", "--output", "json")
    rows = {r["name"]: r["value"] for r in json.loads(out)}
    assert code == 0
    assert rows["catalan"] == "0.91596559417721901505460351493238411077414937428167"
    assert rows["euler_gamma"].startswith("0.5772156649015328606065120900824024310421")


def test_global_validation(capsys):
    assert run_cli(capsys, "--prec", "10", "constants")[0] == 2
    assert run_cli(capsys, "--prec", "20", "--tol", "1e-25", "constants")[0] == 2
    assert run_cli(capsys, "--tol", "abc", "constants")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["--output", "xml", "constants"])
    assert e.value.code == 2


def test_environment_overrides(capsys, monkeypatch):
    monkeypatch.setenv("MLM_PRECISION", "20")
    code, out, _ = run_cli(capsys, "constants", "pi", "--output", "json")
    assert json.loads(out)[0]["value"] == "3.1415926535897932385"
    code, out, _ = run_cli(capsys, "constants", "pi", "--output", "json", "--prec", "16")
    assert json.loads(out)[0]["value"] == "3.141592653589793"
    monkeypatch.setenv("MLM_PRECISION", "x")
    assert run_cli(capsys, "constants")[0] == 2


def test_json_output_round_trips(capsys):
    for argv in (["eval", "lambda", "--n", "3"], ["table", "fex", "--max-n", "2", "--prec", "20"],
                 ["poly", "gsp", "--k", "1", "--n", "4"]):
        _, out, _ = run_cli(capsys, "--output", "json", *argv)
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_verify_exact_subset(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "verify", "--only", "exactcomb", "--prec", "20", "--json", str(path))
    report = json.loads(path.read_text())
    assert code == 0 and "failed=0" in out
    assert all(r["id"].startswith("exactcomb/") for r in report["cases"])
    assert report["precision"] == 20 and report["summary"]["failed"] == 0


def test_verify_quarantined_only_does_not_fail_gate(capsys):
    code, out, _ = run_cli(capsys, "verify", "--only", "discrepancy", "--match", "beta-deriv", "--prec", "30")
    assert code == 0 and "QUARANTINED-FAIL" in out


def test_verify_unknown_group(capsys):
    assert run_cli(capsys, "verify", "--only", "nothing")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "malmsten", "poly", "sgsp", "--k", "2", "--m", "2"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0 and r.stdout.strip() == "x^2 - 3x + 2"
