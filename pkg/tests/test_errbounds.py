import math

import numpy as np
import pytest

from race_density.errbounds import (
    D_factor,
    E2Params,
    PAPER_E2_ROWS,
    bound_E1,
    bound_E2,
    bound_E2_terms,
    paper_b2_row,
    suggest_e2_params,
    tail_bound_params,
)
from race_density.errors import ConfigError
from race_density.zerodata import alpha_sequence

from reference_values import REF_B2

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="module")
def tails(desk_tables):
    tab, consts = desk_tables
    return tail_bound_params(alpha_sequence(tab, consts), TWO_PI)


def test_tail_params_match_published(tails):
    assert tails.k_index == 3
    assert tails.a_coeff == 0.037
    assert tails.b_shift == 1.16
    assert tails.tail_sq <= 5.01


def test_tail_params_monotone_in_wmin(desk_tables):
    tab, consts = desk_tables
    alpha = alpha_sequence(tab, consts)
    a_prev = 0.0
    for w in (TWO_PI, 8.0, 12.0, 20.0):
        p = tail_bound_params(alpha, w)
        assert p.a_coeff >= a_prev
        a_prev = p.a_coeff


def test_tail_param_validity_region(tails):
    with pytest.raises(ConfigError):
        tails.bound(1.0)
    assert 0.0 < tails.bound(TWO_PI) < 1.0


def test_E1_published_value(tails):
    e1 = bound_E1(0.2, tails)
    assert e1 <= 6.2e-13
    # our first-principles geometric ratio lands within x2 of the printed 3.09e-13
    assert 1.5e-13 <= e1 <= 6.2e-13


def test_E1_monotone_and_domain(tails):
    vals = [bound_E1(eps, tails) for eps in (0.1, 0.15, 0.2, 0.35, 0.5)]
    assert vals == sorted(vals)
    with pytest.raises(ConfigError):
        bound_E1(1.0, tails)
    with pytest.raises(ConfigError):
        bound_E1(-0.1, tails)


def test_E2_published_rows(paper_tables):
    tab, _ = paper_tables
    worst = 0.0
    for a, ref in REF_B2.items():
        got = paper_b2_row(a, 0.2, 100.0, tab)
        rel = abs(got / ref - 1.0)
        # 3 significant figures of the printed value
        assert got == pytest.approx(ref, rel=5.5e-3), f"a={a}: {got:.4e} vs {ref:.4e}"
        worst = max(worst, 4.0 * got)
    assert worst <= 2.44e-11


def test_E2_full_sum_is_larger_but_same_scale(paper_tables):
    # the honest three-term bound; still far below the E3 budget
    tab, _ = paper_tables
    for a in range(2, 11):
        full = bound_E2(a, 0.2, 100.0, PAPER_E2_ROWS[a], tab)
        assert 4.0 * paper_b2_row(a, 0.2, 100.0, tab) <= full <= 4.2e-11


def test_E2_monotone_in_C(paper_tables):
    tab, _ = paper_tables
    for eps in (0.1, 0.15, 0.2):
        vals = [bound_E2(2, eps, c, PAPER_E2_ROWS[2], tab) for c in (50.0, 100.0, 200.0)]
        assert vals == sorted(vals, reverse=True)


def test_E2_hypothesis_failures(desk_tables):
    tab, _ = desk_tables
    with pytest.raises(ConfigError, match="e_c"):
        bound_E2(2, 0.2, 100.0, E2Params(c=0.0, e_small=0.4), tab)
    with pytest.raises(ConfigError, match="empty character set"):
        # Re chi(2) takes values +-0.309, +-0.809: nothing at or above 0.9
        bound_E2(2, 0.2, 100.0, E2Params(c_plus=0.9, c_minus=-0.309, e_plus=8.5, e_minus=8.5), tab)


def test_suggest_params_beats_or_matches_default(paper_tables):
    tab, _ = paper_tables
    for a in (2, 5, 10):
        p = suggest_e2_params(a, 0.2, 100.0, tab)
        assert bound_E2(a, 0.2, 100.0, p, tab) <= bound_E2(
            a, 0.2, 100.0, PAPER_E2_ROWS[a], tab
        ) * (1 + 1e-12)


def test_D_factor_values():
    assert D_factor(0.0, 1e-3) == 0.0
    # published hypothesis check: b1_hat(1e4) * (0.2)^2 * 100^2 < 1
    assert 0.000342833 * 0.2**2 * 100**2 < 1.0
    d1 = D_factor(10.0, 0.000342833)
    assert d1 > 0.0
    # increasing in |x| and in b_hat
    assert D_factor(12.0, 0.000342833) > d1
    assert D_factor(10.0, 5e-4) > d1
    with pytest.raises(ConfigError, match="hypothesis"):
        D_factor(100.0, 1e-3)


def test_directed_rounding_resists_perturbation(paper_tables, tails):
    # bounds recomputed with inputs nudged by 1 ulp never exceed the reported value
    tab, _ = paper_tables
    up = 1.0 + 2.0**-52
    e1 = bound_E1(0.2, tails)
    assert e1 >= math.exp(-tails.a_coeff * (TWO_PI / 0.2 / up - tails.b_shift) ** 2) * 8 * math.pi**2 * 1.999
    for a in (2, 10):
        base = bound_E2(a, 0.2, 100.0, PAPER_E2_ROWS[a], tab)
        nudged = bound_E2(a, 0.2 * up, 100.0, PAPER_E2_ROWS[a], tab)
        assert base * (1 + 1e-9) >= min(base, nudged)
    x, bh = 9.5, 3.4e-4
    assert D_factor(x, bh) >= (bh * x * x) ** 2 / (2.0 * (1.0 - bh * x * x) ** 2)


def test_product_excess_matches_factors():
    import numpy as np
    from race_density.errbounds import product_excess

    zs = [np.array([0.0, 1.0, 5.0]), np.array([2.0, 3.0, 4.0])]
    got = product_excess(zs, 3.4e-4)
    manual = (1.0 + np.array([D_factor(float(x), 3.4e-4) for x in zs[0]])) * (
        1.0 + np.array([D_factor(float(x), 3.4e-4) for x in zs[1]])
    ) - 1.0
    assert np.allclose(got, manual, rtol=1e-9)
    assert got[0] >= manual[0] * (1 - 1e-12)  # padded upward
    with pytest.raises(ConfigError):
        product_excess([np.array([100.0])], 1e-3)
