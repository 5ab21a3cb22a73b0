"""Hankel transform against closed forms and an adaptive-quad oracle."""

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import jv

from heisenkit.grids import RadialProfile
from heisenkit.hankel import (
    DegenerateFitError,
    HankelPlan,
    fit_gaussian_decay,
    hankel_plan,
    hankel_transform,
    hardy_gate,
    plan_from_nodes,
)


def gaussian_exact(alpha, a, s):
    # H_alpha(e^{-a r^2})(s) = (2a)^{-(alpha+1)} e^{-s^2/(4a)}
    return (2.0 * a) ** (-(alpha + 1.0)) * np.exp(-(s ** 2) / (4.0 * a))


def test_gaussian_pair_across_orders_and_rates():
    s = np.linspace(0.0, 5.0, 41)
    for alpha in (0.0, 0.5, 1.0, 2.0):
        plan = hankel_plan(alpha, r_max=9.0, s_max=5.0)
        for a in (0.5, 1.0, 2.0):
            got = hankel_transform(plan, np.exp(-a * plan.r_nodes ** 2), s)
            want = gaussian_exact(alpha, a, s)
            rel = np.max(np.abs(got.values - want) / np.abs(want))
            assert rel < 1e-7, (alpha, a, rel)


def test_gaussian_pair_complex_rate():
    """The closed form continues to Re(c) > 0."""
    c = 1.0 + 0.5j
    plan = hankel_plan(0.0, r_max=9.0, s_max=4.0)
    s = np.linspace(0.0, 4.0, 17)
    got = hankel_transform(plan, np.exp(-c * plan.r_nodes ** 2), s)
    want = np.exp(-(s ** 2) / (4.0 * c)) / (2.0 * c)
    assert np.max(np.abs(got.values - want) / np.abs(want)) < 1e-8


def test_transform_at_the_origin_needs_no_special_case():
    # kernel limit at s = 0 is 1 / (2^alpha Gamma(alpha + 1))
    plan = hankel_plan(1.5, r_max=9.0, s_max=3.0)
    got = hankel_transform(plan, np.exp(-plan.r_nodes ** 2), np.array([0.0]))
    assert got.values[0] == pytest.approx(gaussian_exact(1.5, 1.0, 0.0),
                                          rel=1e-9)


def test_against_adaptive_quad_oracle():
    # same integral, independent quadrature and independent Bessel
    alpha = 1.0
    plan = hankel_plan(alpha, r_max=10.0, s_max=3.0)
    F = plan.r_nodes ** 2 * np.exp(-plan.r_nodes ** 2)
    got = hankel_transform(plan, F, np.array([0.7, 2.4]))
    for s_val, g in zip((0.7, 2.4), got.values):
        want, err = quad(
            lambda r: r ** 2 * np.exp(-r ** 2) * jv(alpha, r * s_val)
            / (r * s_val) ** alpha * r ** (2 * alpha + 1),
            0.0, 10.0, epsabs=1e-13, epsrel=1e-13, limit=200)
        assert err < 1e-10
        assert abs(g - want) < 1e-9


def test_double_transform_returns_the_profile():
    """The transform is an involution; run it twice through two plans."""
    alpha = 0.5
    a = 1.0
    plan1 = hankel_plan(alpha, r_max=9.0, s_max=13.0)
    plan2 = hankel_plan(alpha, r_max=13.0, s_max=4.0)
    first = hankel_transform(plan1, np.exp(-a * plan1.r_nodes ** 2),
                             plan2.r_nodes)
    second = hankel_transform(plan2, first.values, np.linspace(0.0, 3.0, 7))
    want = np.exp(-a * np.linspace(0.0, 3.0, 7) ** 2)
    assert np.max(np.abs(second.values - want)) < 1e-7


def test_plan_validation():
    with pytest.raises(ValueError):
        hankel_plan(-0.5)
    nodes = np.array([1.0, 2.0, 3.0])
    weights = np.ones(3)
    with pytest.raises(ValueError):
        HankelPlan(0.0, nodes[::-1], weights, 3.0)
    with pytest.raises(ValueError):
        HankelPlan(0.0, nodes, -weights, 3.0)
    with pytest.raises(ValueError):
        HankelPlan(0.0, nodes, weights[:2], 3.0)
    plan = plan_from_nodes(1.0, nodes, weights)
    assert plan.r_max == 3.0


def test_profile_must_match_the_plan():
    plan = hankel_plan(0.0, r_max=5.0, s_max=2.0)
    with pytest.raises(ValueError):
        hankel_transform(plan, np.ones(7), np.array([1.0]))
    other = RadialProfile(np.linspace(0.1, 5.0, plan.r_nodes.size),
                          np.ones(plan.r_nodes.size))
    with pytest.raises(ValueError):
        hankel_transform(plan, other, np.array([1.0]))


def test_truncation_warning_fires_for_slow_decay():
    plan = hankel_plan(0.0, r_max=4.0, s_max=2.0)
    with pytest.warns(RuntimeWarning, match="not decayed"):
        hankel_transform(plan, np.exp(-0.1 * plan.r_nodes ** 2),
                         np.array([1.0]))


def test_fit_recovers_a_pure_gaussian():
    r = np.linspace(0.05, 6.0, 240)
    fit = fit_gaussian_decay(RadialProfile(r, 3.0 * np.exp(-1.7 * r ** 2)))
    assert fit.a == pytest.approx(1.7, abs=1e-10)
    assert fit.C == pytest.approx(3.0, rel=1e-9)
    assert fit.residual < 1e-10


def test_fit_window_controls_polynomial_contamination():
    # r^4 e^{-2 r^2}: the log-r term biases the rate low, less so far out
    r = np.linspace(0.05, 6.0, 480)
    prof = RadialProfile(r, r ** 4 * np.exp(-2.0 * r ** 2))
    far = fit_gaussian_decay(prof, window=(3.0, 6.0))
    near = fit_gaussian_decay(prof, window=(0.5, 2.0))
    assert 1.85 < far.a < 2.0
    assert abs(far.a - 2.0) < abs(near.a - 2.0)
    assert far.window == (3.0, 6.0)


def test_fit_degenerate_cases():
    r = np.linspace(0.05, 6.0, 240)
    prof = RadialProfile(r, np.exp(-r ** 2))
    with pytest.raises(DegenerateFitError):
        fit_gaussian_decay(prof, window=(5.9, 6.0))   # too few nodes
    with pytest.raises(DegenerateFitError):
        fit_gaussian_decay(RadialProfile(r, np.exp(r ** 2)))  # growing
    with pytest.raises(ValueError):
        fit_gaussian_decay(prof, window=(4.0, 3.0))


def test_hardy_gate_classification():
    assert hardy_gate(1.0, 1.0) == "supercritical"
    assert hardy_gate(0.5, 0.5) == "critical"
    assert hardy_gate(0.4, 0.4) == "subcritical"
    assert hardy_gate(1.0, 0.25 + 1e-10) == "critical"
    assert hardy_gate(1.0, 0.25 + 1e-7) == "supercritical"
    with pytest.raises(ValueError):
        hardy_gate(0.0, 1.0)
    with pytest.raises(ValueError):
        hardy_gate(1.0, -2.0)
