import json
import subprocess
import sys

import pytest

from conftest import pair_coverage_ok
from designdom import builtin, double, fixture_8_4_3, sts_bose
from designdom.campaigns import (
    NOT_COMPUTED,
    REFUTED,
    SUPPORTED,
    biplane,
    pasch,
    projective,
    residual_campaign,
    simple_neat,
    sts_uniform,
)
from designdom.cli import main
from designdom.fileformat import load_design, parse_design_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, blocks",
    [
        (["gen", "pg", "--q", "3"], 13),
        (["gen", "double", "fixture-843"], 28),
        (["gen", "cyclic", "--preset", "sts13"], 26),
        (["gen", "sts-bose", "--v", "15"], 35),
        (["gen", "complement", "fano"], 7),
        (["gen", "residual", "pg3", "--block", "2"], 12),
        (["gen", "derived", "biplane11"], 10),
        (["gen", "dual", "fano"], 7),
    ],
)
def test_gen(capsys, argv, blocks):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert parse_design_file(out).b == blocks


def test_gen_to_file_then_check(tmp_path, capsys):
    path = tmp_path / "d.txt"
    assert run(capsys, "gen", "double", "fixture-843", "--out", str(path))[0] == 0
    assert load_design(path).blocks == double(fixture_8_4_3()).blocks
    code, out, _ = run(capsys, "check", str(path), "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["lambda"] == 6 and info["simple"] is False


def test_invalid_input_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("7 3 2\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "pair" in err
    assert run(capsys, "gamma", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "gen", "residual", "fixture-843")[0] == 2


def test_timeout_exit_3(capsys):
    code, out, _ = run(capsys, "gamma", "sts19", "--timeout", "0", "--budget", "50",
                       "--format", "json")
    assert code == 3
    g = json.loads(out)["solves"]["gamma"]
    assert g["status"] == "lower-only-timeout" and g["lower"] == 12


def test_budget_exit_4(capsys):
    code, _, err = run(capsys, "analyze", "fixture-843", "--enumerate", "--budget", "2000")
    assert code == 4 and "exceeded" in err


def test_fano_text_report(capsys):
    code, out, _ = run(capsys, "analyze", "fano", "--exact")
    assert code == 0
    for row in ("naive", "fractional", "girth6", "punctured"):
        assert row in out
    assert "[4, 4]" in out


def test_fixture_json_report(capsys):
    code, out, _ = run(capsys, "analyze", "fixture-843", "--neat", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    n = rep["neatness"]
    assert n["minimumSets"] == 442
    assert n["neatMinimumSets"] == 46
    assert n["isNeat"] is True and n["isSuperNeat"] is False
    assert rep["enumeration"]["epnCertificate"] is True


def test_json_roundtrip(capsys):
    _, out, _ = run(capsys, "analyze", "sts13", "--exact", "--format", "json")
    rep = json.loads(out)
    assert json.loads(json.dumps(rep)) == rep
    assert rep["solves"]["gamma"]["value"] == 9


def test_params_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--params", "126", "6", "1", "--format", "json")
    rep = json.loads(out)
    lower = {b["name"]: b["value"] for b in rep["lower"]}
    assert code == 0
    assert (lower["naive"], lower["fractional"], lower["girth6"]) == (26, 38, 10)


def test_pasch_cli(capsys, tmp_path):
    code, out, _ = run(capsys, "pasch", "sts13", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 13
    path = tmp_path / "t.txt"
    assert run(capsys, "pasch", "sts13", "--trade", "1", "--out", str(path))[0] == 0
    assert pair_coverage_ok(load_design(path))
    assert run(capsys, "pasch", "sts15")[1].startswith("0 Pasch")


def test_env_timeout(monkeypatch, capsys):
    monkeypatch.setenv("DESIGNDOM_TIMEOUT", "0")
    code, _, _ = run(capsys, "gamma", "sts19", "--budget", "50")
    assert code == 3
    # the flag wins over the environment
    assert run(capsys, "gamma", "fano", "--timeout", "30")[0] == 0


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "biplane", "biplane11", "--format", "json")
    assert code == 0
    (v,) = json.loads(out)["verdicts"]
    assert v["evidence"]["gamma"] == 5


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "designdom.cli", "check", "fano"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "valid: True" in res.stdout


# ---------------------------------------------------------------------------
# campaigns


def test_pasch_campaign_bose_has_none():
    (v,) = pasch(sts_bose(15))
    assert v.verdict == NOT_COMPUTED and v.evidence["configurations"] == 0


def test_pasch_campaign_traded():
    verdicts = pasch(builtin("sts13"), trades=2)
    assert verdicts and all(v.verdict in (SUPPORTED, REFUTED) for v in verdicts)


def test_projective_campaign():
    gam, sn = projective(2)
    assert gam.verdict == SUPPORTED and gam.evidence["gamma_exact"] == 4
    assert sn.verdict == REFUTED and sn.evidence["all_minimum_neat"] is True
    big = projective(5)
    assert big[0].verdict == SUPPORTED
    assert big[0].evidence["girth6_lower"] == big[0].evidence["punctured_upper"] == 10


@pytest.mark.parametrize("name, k", [("biplane11", 5)])
def test_biplane_campaign(name, k):
    v = biplane(builtin(name))
    assert v.evidence["gamma"] == k


def test_residual_campaign():
    verdicts = residual_campaign(builtin("pg3"))
    assert any(v.evidence.get("gamma_residual") == 5 for v in verdicts)


def test_sts_uniform_and_simple_neat():
    v = sts_uniform([builtin("sts13"), builtin("sts13b")])
    assert v.verdict == SUPPORTED
    verdicts = simple_neat([builtin("fano"), fixture_8_4_3(), double(fixture_8_4_3())])
    assert [x.verdict for x in verdicts][:2] == [SUPPORTED, SUPPORTED]
