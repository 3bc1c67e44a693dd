import json

import mpmath as mp
import pytest

from zerofetch.constants import compute_constants, self_check as constants_self_check, write_constants_file
from zerofetch.fixtures import emit_erf, emit_j0, self_check
from zerofetch.labels import conrey_to_paper, parity

REF_CONSTANTS = {
    1: "0.371958756757",
    2: "0.304226855907",
    3: "0.817510797013",
    4: "0.359942299951",
    5: "0.507513113454",  # both-signs value; the one-sided constant is half
}


def test_conrey_mapping():
    assert conrey_to_paper(11) == {1: 0, 2: 1, 4: 2, 8: 3, 5: 4, 10: 5, 9: 6, 7: 7, 3: 8, 6: 9}
    assert parity(11, 5) == -1
    assert parity(11, 2) == 1


def test_constants_reproduce_reference():
    consts = compute_constants(11)
    for j, ref in REF_CONSTANTS.items():
        got = mp.mpf(consts[j]["neg_b1_tilde_zero"])
        assert abs(got - mp.mpf(ref)) < mp.mpf("1e-9"), f"chi_{j}"


def test_constants_doubled_precision_self_check():
    assert constants_self_check(11, dps=25, tol_digits=14)


def test_constants_file_schema(tmp_path):
    doc = write_constants_file(11, tmp_path / "c.json")
    assert doc["schema"] == "race-density-constants/1"
    assert [v["index"] for v in doc["values"]] == [1, 2, 3, 4, 5]
    reread = json.loads((tmp_path / "c.json").read_text())
    assert reread == doc


def test_j0_fixture_emission_and_self_check(tmp_path):
    doc = emit_j0(tmp_path / "j0.json", n_points=400, dps=25)
    assert doc["kind"] == "j0"
    assert len(doc["points"]) >= 400
    xs = [float(p["x"]) for p in doc["points"]]
    assert 0.0 in xs and min(xs) >= 0.0 and max(xs) <= 5000.0
    # J0(0) = 1 present
    p0 = next(p for p in doc["points"] if float(p["x"]) == 0.0)
    assert mp.mpf(p0["value"]) == 1
    assert self_check(doc, sample=25, dps=25)


def test_erf_fixture(tmp_path):
    doc = emit_erf(tmp_path / "erf.json", dps=25)
    p1 = next(p for p in doc["points"] if float(p["x"]) == 1.0)
    # Phi(1) = (1 + erf(1/sqrt(2)))/2 = 0.841344746...; the erf grid pins erf(1)
    assert abs(float(p1["value"]) - 0.8427007929497149) < 1e-15
    assert self_check(doc, sample=20, dps=25)
