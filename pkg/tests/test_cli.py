import json
import math

import pytest

from race_density.cli import main
from race_density.zerodata import zero_file_for

from reference_values import REF_DELTAS, REF_MODEL


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_density_single(capsys):
    code, out, err = _run(
        capsys,
        ["density", "--q", "11", "--a", "10", "--profile", "desk"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "race-density/1"
    row = doc["results"][0]
    assert row["a"] == 10
    assert abs(row["delta_pp"]["value"] - REF_DELTAS[10]) < 1e-3
    assert row["delta_pp"]["radius"] <= 1e-3


def test_density_deterministic_output(capsys):
    args = ["density", "--q", "11", "--a", "3", "--profile", "desk", "--C", "25", "--T", "1400"]
    code1, out1, _ = _run(capsys, args)
    code2, out2, _ = _run(capsys, args)
    assert code1 == code2 == 0
    assert out1 == out2  # timing lives on stderr only


def test_density_inverse_pair_equal(capsys):
    _, out3, _ = _run(capsys, ["density", "--a", "3", "--profile", "desk", "--C", "25", "--T", "1400", "--format", "csv"])
    _, out4, _ = _run(capsys, ["density", "--a", "4", "--profile", "desk", "--C", "25", "--T", "1400", "--format", "csv"])
    val3 = out3.splitlines()[1].split(",")[1]
    val4 = out4.splitlines()[1].split(",")[1]
    assert val3 == val4


def test_density_order_powers(capsys):
    code, out, _ = _run(
        capsys,
        ["density", "--all", "--profile", "desk", "--C", "25", "--T", "1400", "--order", "powers-of:8"],
    )
    assert code == 0
    doc = json.loads(out)
    order = [row["a"] for row in doc["results"]]
    assert order == [8, 9, 6, 4, 10, 3, 2, 5, 7]


def test_exit_code_config_violation(capsys):
    code, out, err = _run(capsys, ["density", "--a", "10", "--T", "300", "--eps", "0.9"])
    assert code == 2
    assert "b1_hat" in err or "hypothesis" in err


def test_exit_code_data_error(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("RACE_DENSITY_DATA", str(tmp_path))
    code, out, err = _run(capsys, ["density", "--a", "10", "--profile", "desk"])
    assert code == 3
    assert "data error" in err


def test_model_command(capsys):
    code, out, _ = _run(capsys, ["model", "--q", "11", "--k", "5", "--profile", "desk"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["model"] == pytest.approx(REF_MODEL[5], abs=1e-6)


def test_model_csv_table(capsys):
    code, out, _ = _run(capsys, ["model", "--profile", "desk", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,model,delta,difference"
    assert len(lines) == 10
    k5 = lines[5].split(",")
    assert float(k5[1]) == pytest.approx(REF_MODEL[5], abs=1e-6)


def test_bounds_command(capsys):
    code, out, _ = _run(
        capsys, ["bounds", "--a", "2", "--profile", "desk"]
    )
    assert code == 0
    doc = json.loads(out)
    res = doc["results"]
    assert res["e1"] <= 6.2e-13
    assert res["e2"] <= 5e-10
    assert res["e3"] > 0.0


def test_mc_command_reproducible(capsys):
    args = ["mc", "--a", "10", "--T", "150", "--N", "20000", "--seed", "42"]
    code1, out1, _ = _run(capsys, args)
    code2, out2, _ = _run(capsys, args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    freqs = doc["results"]["frequencies"]["10"]
    assert sum(freqs.values()) == pytest.approx(1.0, abs=1e-12)


def test_validate_command(capsys):
    path = zero_file_for(11, 2500.0)
    code, out, _ = _run(capsys, ["validate", str(path)])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["status"] == "OK"
    assert len(doc["results"]["characters"]) == 9
    for c in doc["results"]["characters"]:
        assert abs(c["rvm_ratio"] - 1.0) < 0.1
