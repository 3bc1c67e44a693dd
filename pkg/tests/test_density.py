import math

import numpy as np
import pytest

from race_density.density import (
    LatticeEngine,
    RunConfig,
    compute_delta,
    delta_variants,
)
from race_density.errors import ConfigError

from reference_values import REF_DELTAS, REF_S


def _small_engine(tables, **kw):
    tab, consts = tables
    defaults = dict(eps=0.2, c_cap=25.0, t_height=1400.0)
    defaults.update(kw)
    return LatticeEngine(tab, consts, **defaults)


def test_lattice_orientation_and_tiny_C(desk_tables):
    # C=1 lattice {+-1}^2: S equals the 4-term hand sum
    tab, consts = desk_tables
    eng = LatticeEngine(tab, consts, 0.2, 1.0, 1400.0)
    from race_density.charfn import PhiFactors, phi_X_truncated

    factors = PhiFactors(tab, consts, 1400.0)
    a = 2
    s, e3, fp, _ = eng.compute_S_and_E3(a)
    hand = 0.0
    for m in (1, -1):
        for n in (1, -1):
            hand += phi_X_truncated(0.1 * m, 0.1 * n, a, factors) / (m * n)
    assert s == pytest.approx(hand, abs=1e-14)


def test_half_lattice_matches_full(desk_tables):
    tab, consts = desk_tables
    half = _small_engine(desk_tables)
    full = LatticeEngine(tab, consts, 0.2, 25.0, 1400.0, halve_lattice=False)
    for a in (2, 7, 10):
        s_half = half.compute_S_and_E3(a)[0]
        s_full = full.compute_S_and_E3(a)[0]
        assert abs(s_half - s_full) < 1e-15


def test_worker_count_bit_identical(desk_tables):
    runs = []
    for workers in (1, 2, 3):
        eng = _small_engine(desk_tables, workers=workers)
        eng.warm(list(range(2, 11)))
        runs.append([eng.compute_S_and_E3(a)[0] for a in range(2, 11)])
    assert runs[0] == runs[1] == runs[2]


def test_compensated_vs_plain(desk_tables):
    cmp_eng = _small_engine(desk_tables, summation="compensated")
    pln_eng = _small_engine(desk_tables, summation="plain")
    s1 = cmp_eng.compute_S_and_E3(2)[0]
    s2 = pln_eng.compute_S_and_E3(2)[0]
    assert s1 == pytest.approx(s2, abs=1e-12)


def test_hypothesis_violation_raises(desk_tables):
    tab, consts = desk_tables
    with pytest.raises(ConfigError, match="b1_hat"):
        LatticeEngine(tab, consts, 0.9, 100.0, 300.0)


def test_residue_domain(desk_tables):
    eng = _small_engine(desk_tables)
    with pytest.raises(ConfigError):
        eng.compute_S_and_E3(11)
    with pytest.raises(ConfigError):
        eng.compute_S_and_E3(1)


def test_matched_truncation_mode(desk_tables):
    tab, consts = desk_tables
    eng = LatticeEngine(tab, consts, 0.2, 25.0, 1400.0, tail_correction=False)
    s, e3, fp, _ = eng.compute_S_and_E3(2)
    assert e3 == 0.0
    corrected = _small_engine(desk_tables).compute_S_and_E3(2)
    assert s != corrected[0]
    assert abs(s - corrected[0]) < 5e-3


def test_compute_delta_assembly(desk_tables):
    tab, consts = desk_tables
    cfg = RunConfig(a=10, eps=0.2, c_cap=50.0, t_height=2500.0)
    r = compute_delta(cfg, tab, consts)
    assert 0.0 <= r.delta_pp <= 0.5
    expected_radius = (r.e1 / 4.0 + r.e2 + r.e3 + r.fp_budget) / math.pi**2
    assert r.error_radius == pytest.approx(expected_radius, rel=1e-9)
    assert r.error_radius >= expected_radius
    assert r.provenance["ordinate_sensitivity"] < 1e-4
    # already at C=50, T=2500 the density is close to the published value
    assert r.delta_pp == pytest.approx(REF_DELTAS[10], abs=5e-4)


def test_variants_identities(desk_tables):
    tab, consts = desk_tables
    cfg = RunConfig(a=7, eps=0.2, c_cap=25.0, t_height=1400.0)
    r = compute_delta(cfg, tab, consts)
    v = delta_variants(r)
    assert v["--"] == v["++"]
    assert v["+-"] == v["-+"]
    total = (v["++"][0] + v["+-"][0]) + (v["--"][0] + v["-+"][0])
    assert total == 1.0  # exact in floating point with this pairing
    uncorrelated = r.__class__(**{**r.__dict__, "delta_pp": 0.25})
    assert set(x[0] for x in delta_variants(uncorrelated).values()) == {0.25}


def test_full_profile_values(full_results):
    # the published 9-decimal lattice sums, and equal inverse pairs
    by_a = {r.a: r for r in full_results}
    for a, s_ref in REF_S.items():
        assert by_a[a].s_value == pytest.approx(s_ref, abs=1e-8)
    for a, inv in ((2, 6), (3, 4), (7, 8), (5, 9)):
        assert by_a[a].s_value == by_a[inv].s_value  # bit-identical by construction
