import json
import subprocess
import sys

import jsonschema
import pytest

from mtcalc.cli import COMMANDS, main, render
from mtcalc.schema import ENVELOPE_SCHEMA, SERIES_SCHEMA


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, ENVELOPE_SCHEMA)
    return data


def test_ring_point(capsys):
    data = run_json(capsys, ["ring", "--family", "O", "--n", "0", "--coeff", "f2", "--series", "5"])
    jsonschema.validate(data["result"]["series"], SERIES_SCHEMA)
    assert data["result"]["series"]["coefficients"] == [1, 0, 0, 0, 0, 0]


def test_nu_degree_two(capsys):
    data = run_json(capsys, ["nu", "--m", "2", "--degree", "2"])
    assert data["result"]["classes"][0]["mu"] == "μ_{0,1}+μ_{1,0}^2"
    assert "μ_{0,1}+μ_{1,0}^2" in json.dumps(data, ensure_ascii=False)


def test_split_pair(capsys):
    data = run_json(capsys, ["split", "--pair", "O2n-SO2n1", "--n", "1", "--prime", "2"])
    assert data["result"]["verdict"] == "splits"
    data = run_json(capsys, ["split", "--s0", "--family", "Sp", "--n", "3", "--prime", "2"])
    assert data["result"]["verdict"] == "inconclusive"
    assert data["warnings"]


def test_reproduce_table_warnings(capsys):
    data = run_json(capsys, ["reproduce-table"])
    assert len(data["warnings"]) == 2
    assert all("μ_{2,3}+μ_{2,1}^2" in w for w in data["warnings"])
    rows = {r["degree"]: r for r in data["result"]["rows"]}
    assert rows[4]["not_applicable"]


@pytest.mark.parametrize("argv", [
    ["ring", "--family", "SO", "--n", "4", "--coeff", "q"],
    ["restrict", "--map", "j", "--n", "2"],
    ["restrict", "--map", "su", "--n", "2", "--coeff", "q"],
    ["restrict", "--map", "u-selfmap", "--n", "3", "--prime", "3"],
    ["restrict", "--map", "standard", "--family", "U", "--n", "2", "--coeff", "f3"],
    ["restrict", "--map", "detect", "--family", "O", "--n", "2"],
    ["detect", "--family", "U", "--n", "2", "--coeff", "q"],
    ["pin", "--n", "4"],
    ["thom", "--family", "U", "--n", "2", "--coeff", "q", "--series", "20", "--check-ses", "--check-direct-sum"],
    ["qhomology", "--generators", "1,2,2", "--max-degree", "12", "--plus"],
    ["qhomology", "--s0", "--max-degree", "6"],
    ["qhomology", "--rational", "--generators", "2", "--odd-generators", "3", "--max-degree", "6"],
    ["split", "--odd-p-consistency", "--n", "2", "--prime", "3", "--max-degree", "40"],
    ["split", "--nonexact", "--m", "2", "--max-degree", "10"],
    ["nu", "--m", "2", "--count", "--max-degree", "12"],
    ["nu", "--m", "4", "--exponents", "1,0,1,0"],
    ["xi", "--prime", "3", "--series", "20"],
])
def test_commands_produce_valid_envelopes(capsys, argv):
    data = run_json(capsys, argv)
    assert data["command"] == argv[0]
    assert data["citations"]


def test_determinism():
    argv = ["thom", "--family", "Sp", "--n", "2", "--coeff", "f2", "--series", "30", "--check-ses", "--json"]
    assert render(argv) == render(argv)
    text = render(argv)
    assert text == json.dumps(json.loads(text), sort_keys=True, ensure_ascii=False, indent=2)


def test_env_default_truncation(monkeypatch, capsys):
    monkeypatch.setenv("MTCALC_MAX_DEGREE", "7")
    data = run_json(capsys, ["xi", "--prime", "2"])
    assert data["result"]["series"]["trunc_degree"] == 7


def test_human_output(capsys):
    assert main(["reproduce-table"]) == 0
    out = capsys.readouterr().out
    assert "4  N.A." in out and "warning:" in out


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["ring", "--family", "O"],
    ["ring", "--family", "O", "--n", "2", "--coeff", "f4"],
    ["ring", "--family", "O", "--n", "2", "--wat"],
    ["restrict", "--map", "u-selfmap", "--n", "2", "--prime", "2"],
    ["split", "--pair", "PinPlus4n-Spin4n1", "--n", "1", "--dimension", "6"],
    ["nu", "--m", "3", "--degree", "2"],
    ["thom", "--family", "O", "--n", "2", "--coeff", "q"],
    [],
])
def test_validation_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_invariant_violation_exits_3(monkeypatch, capsys):
    from mtcalc import cli
    from mtcalc.errors import InvariantViolation

    def broken(p, N):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli.charclasses, "xi_subalgebra_series", broken)
    assert main(["xi", "--prime", "2"]) == 3
    assert "forced" in capsys.readouterr().err


def test_selftest_passes(capsys):
    data = run_json(capsys, ["selftest"])
    failed = [c for c in data["result"]["checks"] if not c["passed"]]
    assert not failed
    assert data["result"]["passed"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mtcalc", "xi", "--prime", "2", "--series", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "1,1,2,3,5" in proc.stdout


def test_commands_listed():
    assert set(COMMANDS) == {"ring", "restrict", "detect", "pin", "thom", "qhomology", "split",
                             "nu", "xi", "reproduce-table", "selftest"}


def test_docs_schema_matches_package():
    from pathlib import Path
    path = Path(__file__).resolve().parents[1] / "docs" / "envelope.schema.json"
    assert json.loads(path.read_text()) == ENVELOPE_SCHEMA
