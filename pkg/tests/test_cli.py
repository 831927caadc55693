"""Command-line interface: exit codes, formats, config precedence, mutations."""

from __future__ import annotations

import io
import json

from binomsums.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_list_text_and_json():
    code, text = run_cli("list")
    assert code == 0
    assert "ID01" in text and "ID26" in text
    code, payload = run_cli("list", "--format", "json")
    assert code == 0
    entries = json.loads(payload)
    assert entries[0]["id"] == "ID01"
    assert any(e["id"] == "ID15" and e["params"] == ["s"] for e in entries)


def test_check_id16():
    code, text = run_cli("check", "ID16", "--n-max", "2")
    assert code == 0
    assert "lhs=3/2 rhs=3/2" in text
    assert "n=2" in text


def test_check_unknown_id_is_usage_error():
    code, _ = run_cli("check", "ID99")
    assert code == 2


def test_unknown_flag_is_usage_error():
    code, _ = run_cli("check", "ID16", "--frobnicate")
    assert code == 2


def test_unknown_subcommand_is_usage_error():
    code, _ = run_cli("frobnicate")
    assert code == 2


def test_wz_single_pair():
    code, text = run_cli("wz", "thm2", "--n-max", "4", "--samples", "2")
    assert code == 0
    assert "WZ-thm2" in text
    assert "symbolic residual = 0" in text


def test_wz_mutation_scale_cert():
    code, text = run_cli("wz", "thm2", "--n-max", "3", "--samples", "1",
                         "--mutate", "scale-cert:2")
    assert code == 1
    assert "symbolic residual != 0" in text


def test_wz_mutation_validation():
    code, _ = run_cli("wz", "thm2", "--mutate", "nonsense")
    assert code == 2
    code, _ = run_cli("wz", "thm2", "--mutate", "scale-cert:1")
    assert code == 2
    code, _ = run_cli("wz", "thm2", "--mutate", "scale-cert:0.5")
    assert code == 2


def test_check_mutation_flow():
    code, text = run_cli("check", "ID24", "--n-max", "3",
                         "--mutate", "id24-flip-h2n")
    assert code == 1
    assert "fail" in text
    code, _ = run_cli("check", "ID24", "--n-max", "3", "--mutate", "bogus")
    assert code == 2


def test_json_output_byte_stable():
    args = ("check", "ID16", "--n-max", "3", "--format", "json", "--seed", "0")
    code_a, a = run_cli(*args)
    code_b, b = run_cli(*args)
    assert code_a == code_b == 0
    assert a == b
    doc = json.loads(a)
    assert doc["suite"] == "check:ID16"
    assert doc["summary"]["fail"] == 0


def test_config_file_and_flag_precedence(tmp_path):
    config = tmp_path / "conf.json"
    config.write_text(json.dumps({"n_max": 2, "format": "json", "seed": 3}))
    code, payload = run_cli("check", "ID16", "--config", str(config))
    assert code == 0
    doc = json.loads(payload)            # format came from the file
    assert doc["seed"] == 3
    assert max(r["n"] for r in doc["results"]) == 2
    # explicit flag beats the file
    code, payload = run_cli("check", "ID16", "--config", str(config),
                            "--seed", "7", "--format", "json")
    assert json.loads(payload)["seed"] == 7


def test_config_file_errors(tmp_path):
    code, _ = run_cli("check", "ID16", "--config", str(tmp_path / "missing.json"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n_max": "two"}))
    code, _ = run_cli("check", "ID16", "--config", str(bad))
    assert code == 2
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"depth": 3}))
    code, _ = run_cli("check", "ID16", "--config", str(unknown))
    assert code == 2


def test_suite_small_run_json():
    code, payload = run_cli("suite", "--n-max", "2", "--samples", "1",
                            "--format", "json")
    assert code == 0
    doc = json.loads(payload)
    ids = {row["id"] for row in doc["results"]}
    assert "ID01" in ids and "WZ-thm1" in ids and "WZ-thm3" in ids
    assert doc["summary"]["fail"] == 0
