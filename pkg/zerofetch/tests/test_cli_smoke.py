import json

from zerofetch.cli import main


def test_constants_command(tmp_path, capsys):
    out = tmp_path / "constants_q11.json"
    code = main(["constants", "--q", "11", "--out", str(out), "--dps", "25"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["modulus"] == 11
    assert len(doc["values"]) == 5
    assert abs(float(doc["values"][0]["neg_b1_tilde_zero"]) - 0.371958756757) < 1e-9


def test_fixture_command(tmp_path):
    code = main(["fixtures", "--out", str(tmp_path), "--j0-points", "200"])
    assert code == 0
    assert (tmp_path / "j0_oracle.json").exists()
    assert (tmp_path / "erf_oracle.json").exists()
