import math

import numpy as np
import pytest

from race_density import _kernels
from race_density.charfn import (
    F_T,
    PhiFactors,
    bessel_j0,
    b1_T,
    f_bound_constants,
    phi_X_truncated,
    truncated_factor,
)
from race_density.errors import DataError

from reference_values import REF_B1_AT_T, REF_D_TABLE


def test_j0_special_points():
    assert bessel_j0(0.0) == 1.0
    assert abs(bessel_j0(2.404825557695773)) < 5e-13
    assert bessel_j0(-3.7) == bessel_j0(3.7)  # even via |x|


def test_j0_against_oracle(j0_fixture):
    xs = np.array([float(p["x"]) for p in j0_fixture["points"]])
    ref = np.array([float(p["value"]) for p in j0_fixture["points"]])
    got = bessel_j0(xs)
    err = np.abs(got - ref)
    assert len(xs) >= 10000
    assert err.max() < 5e-14, f"max error {err.max():.3e} at x={xs[err.argmax()]}"


def test_j0_scalar_kernel_matches_vector(j0_fixture):
    # the engine's scalar kernel and the public vector op share coefficients;
    # libm cos/sin may differ from numpy's by an ulp, nothing more
    xs = np.array([float(p["x"]) for p in j0_fixture["points"]][::7])
    vec = bessel_j0(xs)
    scal = np.array([_kernels.j0_scalar(float(x)) for x in xs])
    assert np.max(np.abs(vec - scal)) < 3e-16


def test_b1_T_values(desk_tables):
    tab, consts = desk_tables
    # at T=0 the coefficient is the full (negative) constant
    for j in range(1, 6):
        assert b1_T(j, 1e-9, tab, consts) == pytest.approx(
            -consts.neg_b1_zero(j, tab.table), rel=1e-12
        )
    with pytest.raises(DataError):
        b1_T(1, 5000.0, tab, consts)  # beyond desk completeness


def test_b1_T_at_height_10k(paper_tables):
    tab, consts = paper_tables
    for j, ref in REF_B1_AT_T.items():
        got = b1_T(j, 10000.0, tab, consts)
        assert got == pytest.approx(ref, abs=2.5e-9)


def test_b1_monotone_to_zero(desk_tables):
    tab, consts = desk_tables
    vals = [b1_T(1, t, tab, consts) for t in (10.0, 100.0, 1000.0, 2500.0)]
    assert all(v < 0 for v in vals)
    assert vals == sorted(vals)  # increases toward 0


def test_F_T_basics(desk_tables):
    tab, consts = desk_tables
    fac = truncated_factor(5, 2500.0, tab, consts)
    assert F_T(0.0, fac) == 1.0
    assert F_T(1.3, fac) == F_T(-1.3, fac)


def test_F_T_against_oracle(desk_tables, ft_fixture):
    tab, consts = desk_tables
    cache = {}
    for p in ft_fixture["points"]:
        t_height = float(p["T"])
        key = (p["index"], t_height)
        if key not in cache:
            cache[key] = truncated_factor(p["index"], t_height, tab, consts)
        got = F_T(float(p["z"]), cache[key])
        assert got == pytest.approx(float(p["value"]), abs=1e-12), (
            f"F_T mismatch at chi_{p['index']}, T={p['T']}, z={p['z']}"
        )


def test_phi_normalization_and_symmetry(desk_tables):
    tab, consts = desk_tables
    factors = PhiFactors(tab, consts, 2000.0)
    assert phi_X_truncated(0.0, 0.0, 2, factors) == 1.0
    rng = np.random.default_rng(5)
    pts = rng.uniform(-6, 6, size=(100, 2))
    for a in (2, 7, 10):
        v1 = phi_X_truncated(pts[:, 0], pts[:, 1], a, factors)
        v2 = phi_X_truncated(pts[:, 1], pts[:, 0], a, factors)
        v3 = phi_X_truncated(-pts[:, 0], -pts[:, 1], a, factors)
        assert np.max(np.abs(v1 - v2)) < 1e-12
        assert np.array_equal(v1, v3)  # exact: depends on |.| only


def test_phi_monotone_refinement(desk_tables):
    # |phi_T' - phi_T| within the combined truncation envelopes
    from race_density.errbounds import D_factor

    tab, consts = desk_tables
    f1 = PhiFactors(tab, consts, 800.0)
    f2 = PhiFactors(tab, consts, 2500.0)
    rng = np.random.default_rng(9)
    for _ in range(25):
        t1, t2 = rng.uniform(-4, 4, 2)
        a = int(rng.choice([2, 3, 5, 10]))
        p1 = phi_X_truncated(t1, t2, a, f1)
        p2 = phi_X_truncated(t1, t2, a, f2)
        zs = f1.z_arguments(np.array([t1]), np.array([t2]), a)
        env = 1.0
        for j in f1.reps:
            env *= 1.0 + D_factor(float(zs[j][0]), f1.b1_hat())
        # both truncations sit inside the T=800 envelope of the true value
        assert abs(p2 - p1) <= 2.0 * abs(p1) * (env - 1.0) + 1e-12


def test_f_bound_constants_table(paper_tables):
    tab, _ = paper_tables
    for j, row in REF_D_TABLE.items():
        for e_chi, d_ref in row.items():
            d, e = f_bound_constants(j, int(round(2 * e_chi)), tab)
            assert e == e_chi
            assert d == d_ref, f"d(chi_{j}) at e={e_chi}: got {d}, expected {d_ref}"


def test_f_bound_trivial_and_errors(desk_tables):
    tab, _ = desk_tables
    assert f_bound_constants(3, 0, tab) == (1.0, 0.0)
    with pytest.raises(DataError):
        f_bound_constants(3, 10**6, tab)


def test_f_bound_is_actual_bound(desk_tables, ft_fixture):
    # |F_T(z)| <= min(1, d z^-e) + truncation slack on oracle spot values
    tab, consts = desk_tables
    for p in ft_fixture["points"]:
        if p["paired"] or float(p["z"]) < 3.0:
            continue
        d, e = f_bound_constants(p["index"], 10, tab)
        z = float(p["z"])
        assert abs(float(p["value"])) <= min(1.0, d * z**-e) * 1.01 + 1e-9
