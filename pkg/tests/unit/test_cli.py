import json
import runpy
import sys

import pytest
from typer.testing import CliRunner

from kmaj.cli import app
from kmaj.models import Word
from kmaj.tableaux import StandardTableau

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, list(args))


def test_stats_worked_example():
    result = invoke("stats", "--word", "9 8 6 1 7 3 2 4 5", "--k", "3")
    assert result.exit_code == 0
    assert "maj_3 = 19" in result.output
    assert "Des_3: (1,4) (2,5) (3,6) (5,8)" in result.output
    assert "iDes: {2,5,7,8}" in result.output


def test_stats_json_round_trips():
    result = invoke("stats", "--word", "9 8 _ 6 1", "--k", "2", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert Word.from_json(payload["word"]) == Word.parse("9 8 _ 6 1")
    assert payload["ides"] is None
    assert payload["maj_k"] == sum(i for i, _ in payload["des_k"]) + len(payload["inv_k"])


def test_stats_csv():
    result = invoke("stats", "--word", "3 2 1", "--format", "csv")
    lines = result.output.strip().splitlines()
    assert lines[0] == "word,k,maj_k,maj,inv,des_k,inv_k,ides"
    assert lines[1].startswith("3 2 1,1,3,3,3,")


def test_phi_worked_example():
    result = invoke("phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3")
    assert result.exit_code == 0
    assert result.output.strip() == "9 8 6 1 7 3 2 4 5"


def test_phi_steps():
    result = invoke("phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3", "--steps")
    lines = result.output.strip().splitlines()
    assert lines[-1] == "9 8 6 1 7 3 2 4 5"
    assert len(lines) > 1
    assert all(line.startswith("gamma_") for line in lines[:-1])


def test_psi_and_phirange():
    result = invoke("psi", "--word", "9 8 6 1 7 3 2 4 5", "--k", "3", "--format", "json")
    assert Word.from_json(json.loads(result.output)["psi"]) == Word.parse("6 9 3 8 1 7 2 4 5")
    result = invoke("phirange", "--word", "2 1", "--i", "2", "--h", "1")
    assert result.output.strip() == "2 1"


def test_phirange_bad_bounds_exit_2():
    result = invoke("phirange", "--word", "1 2 3", "--i", "1", "--h", "2")
    assert result.exit_code == 2


def test_foata_rejects_spacers():
    assert invoke("foata", "--word", "2 _ 1").exit_code == 2
    assert invoke("foata", "--word", "2 1").output.strip() == "2 1"


def test_malformed_word_exit_2():
    result = invoke("stats", "--word", "1 x 2")
    assert result.exit_code == 2


def test_unknown_command_exit_2():
    result = invoke("frobnicate")
    assert result.exit_code == 2


def test_tstats_figure():
    result = invoke("tstats", "--tableau", "1 3 4 7 / 2 5 6 / 8", "--k", "2")
    assert result.exit_code == 0
    assert "maj = 12" in result.output
    assert "maj_2 = 16" in result.output
    assert "Des_2: (3,5) (4,6) (6,8)" in result.output


def test_tstats_k4_needs_experimental():
    assert invoke("tstats", "--tableau", "1 2 / 3 4 / 5 6", "--k", "4").exit_code == 2
    args = ("tstats", "--tableau", "1 2 / 3 4 / 5 6", "--k", "4", "--experimental")
    assert invoke(*args).exit_code == 0


def test_Phi_command():
    result = invoke("Phi", "--tableau", "1 3 5 7 / 2 4 6 / 8", "--k", "2", "--format", "json")
    assert result.exit_code == 0
    image = StandardTableau.from_json(json.loads(result.output)["Phi"])
    assert image == StandardTableau.parse("1 3 4 7 / 2 5 6 / 8")
    result = invoke("Phi", "--tableau", "1 3 4 7 / 2 5 6 / 8", "--k", "2", "--inverse")
    assert result.output.strip() == "1 3 5 7 / 2 4 6 / 8"


def test_rsk_command():
    result = invoke("rsk", "--word", "9 8 6 1 7 3 2 4 5")
    assert "Des(Q): {2,5,7,8}" in result.output
    assert invoke("rsk", "--word", "1 1 2").exit_code == 2


def test_dist_words_with_oracle():
    result = invoke("dist", "--multiset", "1:1,2:1,3:1", "--k", "2", "--oracle")
    assert result.exit_code == 0
    assert "maj_2: 1 + 2q + 2q^2 + q^3" in result.output
    assert "(match)" in result.output


def test_dist_spacers_json():
    result = invoke("dist", "--multiset", "1 2 3", "--spacers", "2,5", "--format", "json")
    payload = json.loads(result.output)
    assert payload["spacers"] == [2, 5]
    assert payload["distribution"] == {"coeffs": [3, 0, 0, 3]}


def test_dist_shape_csv():
    result = invoke("dist", "--shape", "2,2", "--format", "csv")
    assert result.output.strip().splitlines() == [
        "exponent,count",
        "0,0",
        "1,0",
        "2,1",
        "3,0",
        "4,1",
    ]


def test_dist_needs_one_source():
    assert invoke("dist").exit_code == 2
    assert invoke("dist", "--multiset", "1 2", "--shape", "2").exit_code == 2


def test_classes_command():
    result = invoke("classes", "--n", "3", "--k", "1")
    assert result.exit_code == 0
    assert "{2 1 3, 3 1 2}" in result.output
    assert "4 classes" in result.output
    payload = json.loads(invoke("classes", "--n", "3", "--k", "2", "--format", "json").output)
    assert payload["k"] == 2
    assert [[1, 3, 2], [2, 1, 3]] in [c["members"] for c in payload["classes"]]


def test_verify_examples_passes():
    result = invoke("verify", "examples")
    assert result.exit_code == 0
    first, report = result.output.strip().splitlines()
    assert first == "PASS examples (checked 19)"
    assert json.loads(report)["passed"] is True


def test_verify_failure_exit_1():
    result = invoke("verify", "theta-check", "--max-size", "3")
    assert result.exit_code == 1
    assert result.output.startswith("FAIL theta-check")


def test_verify_unknown_suite_exit_2():
    assert invoke("verify", "nope").exit_code == 2


def test_verify_list():
    result = invoke("verify", "--list")
    assert result.exit_code == 0
    assert "mahonian" in result.output.splitlines()


def test_verify_mahonian_small():
    assert invoke("verify", "mahonian", "--max-size", "4").exit_code == 0


def test_config_and_log():
    result = invoke("config", "--set", "format=json")
    assert result.exit_code == 0
    assert "format: json" in result.output
    assert invoke("config", "--set", "threads=zero").exit_code == 2
    assert invoke("log").output.strip() == "No runs logged"
    invoke("verify", "examples")
    assert "examples PASS" in invoke("log", "--limit", "5").output


def test_config_format_is_default():
    invoke("config", "--set", "format=json")
    result = invoke("phi", "--word", "2 1", "--k", "2")
    assert json.loads(result.output)["phi"] == [2, 1]


def test_runs_as_module(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["kmaj", "phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3"])
    with pytest.raises(SystemExit) as exc:
        runpy.run_module("kmaj.cli", run_name="__main__")
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == "9 8 6 1 7 3 2 4 5"
