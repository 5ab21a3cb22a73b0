"""Sector-Hankel identity, oscillator kernel, decay gates."""

import math

import numpy as np
import pytest

from heisenkit.grids import polar_grid
from heisenkit.heisenberg import ComplexTime, heat_kernel_lambda
from heisenkit.propagator import (
    DecayDomainError,
    ExceptionalLambdaError,
    GateParams,
    equality_case_profile,
    gate_lambda_window,
    kernel_K,
    schrodinger_evolve,
    theorem34_gaussian_pair,
    theorem34_pair,
    uniqueness_gate,
)
from heisenkit.quadrature import gauss_panels
from heisenkit.twisted import radial_slice


def test_evolution_is_the_complex_time_semigroup():
    """Evolving the q_a slice by eps + i s0 lands on the q_{a+eps+is0} slice."""
    grid = polar_grid(1, nr=96, r_max=8.0, nsphere=48)
    a, lam, s0, eps = 1.0, 1.0, 0.7, 0.01
    f = radial_slice(grid, lam, heat_kernel_lambda(ComplexTime(a), lam, grid.r))
    u = schrodinger_evolve(f, ComplexTime(eps, s0))
    want = heat_kernel_lambda(ComplexTime(a + eps, s0), lam, grid.r)
    mask = grid.r <= 3.0
    err = np.max(np.abs(u.values[mask] - want[mask, None]))
    assert err < 1e-4 * np.max(np.abs(want))
    with pytest.raises(ValueError):
        schrodinger_evolve(f, ComplexTime(0.0, s0))


def test_gaussian_pair_ratio_is_constant():
    lhs, rhs, stats = theorem34_gaussian_pair(1.0, 1.0, 1.0)
    assert stats["rel_std"] < 1e-3
    assert stats["nodes"] == lhs.r.size
    assert abs(stats["c_lambda"]) > 0.1
    # the linking constant does not depend on the radial window
    _, _, again = theorem34_gaussian_pair(1.0, 1.0, 1.0,
                                          r=np.linspace(0.5, 2.0, 31))
    assert abs(again["c_lambda"] - stats["c_lambda"]) < 1e-3 * abs(stats["c_lambda"])
    with pytest.raises(ValueError):
        theorem34_gaussian_pair(-1.0, 1.0, 1.0)


def test_grid_pair_agrees_with_the_closed_pipeline():
    """Same linking constant from sampled data as from the analytic twin."""
    lam, s0 = 1.0, 0.7
    _, _, closed = theorem34_gaussian_pair(1.0, lam, s0)
    grid = polar_grid(1, nr=96, r_max=6.0, nsphere=48)
    t_nodes, t_w = gauss_panels(-5.5, 5.5, 10, 12)
    vals = (np.exp(-grid.r ** 2)[:, None, None]
            * np.ones(grid.omega.shape[0])[None, :, None]
            * np.exp(-t_nodes ** 2)[None, None, :]).astype(complex)
    _, _, stats = theorem34_pair(vals, t_nodes, 0, 0, 1, lam, s0, 1e-3, grid,
                                 t_weights=t_w)
    assert stats["rel_std"] < 1e-2
    assert abs(stats["c_lambda"] / closed["c_lambda"] - 1.0) < 5e-3


def test_kernel_series_matches_closed_form():
    for p0, q0 in [(0, 0), (1, 0), (0, 1)]:
        series, closed = kernel_K(1.3, 0.7, 1.0, 1.0, 1, p0, q0)
        assert abs(series - closed) < 1e-4 * abs(closed), (p0, q0)


def test_kernel_is_even_in_lam_for_balanced_sectors():
    plus = kernel_K(1.3, 0.7, 1.0, 1.0, 1, 0, 0)
    minus = kernel_K(-1.3, 0.7, 1.0, 1.0, 1, 0, 0)
    assert plus == minus


def test_exceptional_frequencies_are_rejected():
    with pytest.raises(ExceptionalLambdaError):
        kernel_K(math.pi, 0.7, 1.0, 1.0, 1, 0, 0)
    with pytest.raises(ExceptionalLambdaError):
        theorem34_gaussian_pair(1.0, 2.0 * math.pi, 0.5)
    with pytest.raises(ExceptionalLambdaError):
        theorem34_gaussian_pair(1.0, math.pi + 1e-9, 1.0)


def test_gate_margin_limits_and_monotonicity():
    # lam = 0 closed form: margin = s0^2 / (4ab) - 1/4
    margin, super_ = uniqueness_gate(GateParams(1.0, 1.0, 1.1))
    assert margin == pytest.approx(1.1 ** 2 / 4.0 - 0.25, rel=1e-12)
    assert super_
    margin0, _ = uniqueness_gate(GateParams(1.0, 1.0, 1.0))
    assert margin0 == pytest.approx(0.0, abs=1e-12)
    # continuity at the lam -> 0 limit
    near, _ = uniqueness_gate(GateParams(1.0, 1.0, 1.1, lam=1e-9))
    assert near == pytest.approx(margin, abs=1e-12)
    # eps enters as a + eps, b + eps
    shifted, _ = uniqueness_gate(GateParams(1.0, 1.0, 1.1, eps=0.1))
    assert shifted == pytest.approx(1.1 ** 2 / (4.0 * 1.1 ** 2) - 0.25, rel=1e-12)
    # the oscillation factor decays in lam
    lo, _ = uniqueness_gate(GateParams(0.5, 0.5, 1.0, lam=0.5))
    hi, _ = uniqueness_gate(GateParams(0.5, 0.5, 1.0, lam=1.0))
    assert lo > hi


def test_gate_lambda_window_bracket():
    a = b = 0.3
    s0 = 0.7
    delta = gate_lambda_window(a, b, s0)
    assert delta is not None and 0 < delta < math.pi / s0
    inside, _ = uniqueness_gate(GateParams(a, b, s0, lam=0.999 * delta))
    outside, _ = uniqueness_gate(GateParams(a, b, s0, lam=1.001 * delta))
    assert inside > 0 >= outside
    # ab >= s0^2 never opens a window
    assert gate_lambda_window(1.0, 1.0, 0.5) is None


def test_gate_params_validation():
    for bad in [dict(a=0.0, b=1.0, s0=1.0), dict(a=1.0, b=-1.0, s0=1.0),
                dict(a=1.0, b=1.0, s0=0.0), dict(a=1.0, b=1.0, s0=1.0, eps=-0.1),
                dict(a=1.0, b=1.0, s0=1.0, lam=-0.5)]:
        with pytest.raises(ValueError):
            GateParams(**bad)


def test_equality_case_satisfies_the_sharp_relation():
    f_slice, b_fit, residual = equality_case_profile(1.0, 1.0, 1.0, eps=1e-3)
    assert residual < 5e-3
    # tanh(a lam) tanh(b lam) = sin^2(lam s0) pins b
    want_b = math.atanh(math.sin(1.0) ** 2 / math.tanh(1.001))
    assert b_fit == pytest.approx(want_b, rel=1e-2)
    assert f_slice.lam == 1.0
    with pytest.raises(ValueError):
        equality_case_profile(1.0, 0.0, 1.0)
    with pytest.raises(ExceptionalLambdaError):
        equality_case_profile(1.0, math.pi, 1.0)
    assert issubclass(DecayDomainError, ValueError)
