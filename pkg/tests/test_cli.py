import json

import pytest

from detlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pseudochar_ok(capsys):
    code, out, _ = run(capsys, "pseudochar", "--rep", "S3_std")
    assert code == 0
    assert json.loads(out)["checks"][1]["checked"] == 216


def test_pseudochar_wrong_dimension_gives_witness(capsys, tmp_path):
    from detlab.corpus import build_rep

    path = tmp_path / "bad_rep.json"
    path.write_text(json.dumps(build_rep("S3_std").to_json()))
    code, out, _ = run(capsys, "pseudochar", "--rep", str(path), "--d", "1")
    assert code == 1
    report = json.loads(out)
    witness = report["checks"][1]["witness"]
    assert witness is not None and len(witness["tuple"]) == 2


def test_malformed_json_is_input_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "pseudochar", "--rep", str(path))
    assert code == 2
    assert "--rep" in err


def test_missing_field_is_named(capsys, tmp_path):
    path = tmp_path / "rep.json"
    path.write_text(json.dumps({"images": {}}))
    code, _, err = run(capsys, "pseudochar", "--rep", str(path))
    assert code == 2
    assert "ring" in err


def test_bad_ring_name(capsys):
    code, _, err = run(capsys, "amitsur", "--ring", "R")
    assert code == 2 and "--ring" in err


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_gamma_report(capsys):
    code, out, _ = run(capsys, "gamma", "--group", "Z2", "--d", "2", "--base", "Z")
    assert code == 0
    report = json.loads(out)
    assert report["dimension"] == 3
    assert report["elementary_divisors"] == []
    assert report["relations_up_to_degree"] == 4
    assert "L2(g)^2 - 1" in report["relations"]


def test_dim2_subcommands(capsys):
    assert run(capsys, "dim2", "verify", "--rep", "D4_std")[0] == 0
    code, out, _ = run(capsys, "dim2", "deformations", "--group", "Z4")
    assert code == 0 and json.loads(out)["count"] == 4
    code, out, _ = run(capsys, "dim2", "odd-locus", "--trials", "20")
    assert code == 0
    checks = {c["id"]: c for c in json.loads(out)["checks"]}
    assert checks["odd-locus-linear-constant"]["kappa"] is None
    assert checks["odd-locus-zero-sets"]["agree"] == 20


def test_ch_and_irreducible(capsys):
    code, out, _ = run(capsys, "ch", "quotient", "--rep", "S3_std_F7")
    assert code == 0 and json.loads(out)["quotient_dim"] == 4
    assert run(capsys, "ch", "kernel", "--rep", "S3_perm3")[0] == 0
    code, out, _ = run(capsys, "irreducible", "--rep", "Z3_chi1_plus_chi2_F7")
    assert code == 0 and json.loads(out)["status"] == "exhausted"


def test_text_report_and_out_file(capsys, tmp_path):
    target = tmp_path / "r.txt"
    code, out, _ = run(capsys, "newton", "--d", "2", "--trials", "2", "--report", "text", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[1].startswith("PASS  newton-series")


def test_polarize_and_amitsur(capsys):
    assert run(capsys, "polarize", "--rep", "S3_std", "--trials", "5")[0] == 0
    assert run(capsys, "amitsur", "--d", "2", "--trials", "3", "--word-length", "4")[0] == 0


def test_suite_all_is_deterministic(capsys, tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["suite-all", "--seed", "42", "--out", str(a)]) == 0
    monkeypatch.setenv("DETLAB_THREADS", "3")
    assert main(["suite-all", "--seed", "42", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["passed"] == report["total"]
