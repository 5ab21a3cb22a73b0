"""Hermite functions, Mehler kernel, oscillator evolution, decay gate."""

import math

import numpy as np
import pytest
from scipy.special import eval_hermite

from heisenkit.hermite import (
    CausticError,
    MehlerParams,
    gate_boundary_profile,
    hermite_evolve,
    hermite_fn,
    hermite_gate,
    hermite_grid,
    mehler_kernel,
    mehler_kernel_r,
)


def test_hermite_fn_matches_scipy_and_is_orthonormal():
    x = np.linspace(-10.0, 10.0, 2001)
    for k in range(6):
        norm = math.sqrt(2.0 ** k * math.factorial(k) * math.sqrt(math.pi))
        want = eval_hermite(k, x) * np.exp(-0.5 * x * x) / norm
        assert np.max(np.abs(hermite_fn(k, x) - want)) < 1e-12
    h = np.stack([hermite_fn(k, x) for k in range(6)])
    gram = np.trapezoid(h[:, None, :] * h[None, :, :], x, axis=-1)
    assert np.allclose(gram, np.eye(6), atol=1e-10)
    with pytest.raises(ValueError):
        hermite_fn(-1, x)


def test_mehler_generating_function_identity():
    # sum_k r^k h_k(x) h_k(y) converges geometrically inside the disc
    x = np.linspace(-2.0, 2.0, 9)
    X, Y = np.meshgrid(x, x, indexing="ij")
    for r in (0.6, 0.4 * np.exp(-0.5j)):
        total = np.zeros(X.shape, dtype=complex)
        for k in range(80):
            total += r ** k * hermite_fn(k, X) * hermite_fn(k, Y)
        assert np.max(np.abs(mehler_kernel_r(r, X, Y) - total)) < 1e-12
    # r = 0 is the ground-state projector
    proj = mehler_kernel_r(0.0, X, Y)
    assert np.allclose(proj, hermite_fn(0, X) * hermite_fn(0, Y), atol=1e-15)


def test_propagator_kernel_separates_in_n():
    p1 = MehlerParams(0.35, 1)
    p2 = MehlerParams(0.35, 2)
    x = np.array([0.3, -1.1])
    y = np.array([0.9, 0.4])
    k2 = mehler_kernel(p2, x, y)
    k1 = mehler_kernel(p1, x[0], y[0]) * mehler_kernel(p1, x[1], y[1])
    assert k2 == pytest.approx(k1, rel=1e-14)


def test_eigenfunctions_pick_up_their_phases():
    x = np.linspace(-4.0, 4.0, 161)
    s = 0.35
    for k in range(3):
        u = hermite_evolve(lambda y, k=k: hermite_fn(k, y), s, x)
        want = np.exp(-1j * (2 * k + 1) * s) * hermite_fn(k, x)
        assert np.max(np.abs(u - want)) < 1e-10, k


def test_quarter_period_is_the_fourier_transform():
    # e^{-x^2/2} is the Fourier fixed point, so it only picks up e^{-i pi/4}
    x = hermite_grid(8.0, 512)
    u = hermite_evolve(lambda y: np.exp(-0.5 * y * y), math.pi / 4.0, x)
    assert np.max(np.abs(u - np.exp(-0.25j * math.pi) * np.exp(-0.5 * x * x))) < 1e-10


def test_evolution_group_law_and_unitarity():
    x = hermite_grid(8.0, 512)
    f = lambda y: (y + 0.2) * np.exp(-0.8 * y * y)
    u1 = hermite_evolve(f, 0.3, x)
    u2 = hermite_evolve(u1, 0.45, x)
    direct = hermite_evolve(f, 0.75, x)
    assert np.max(np.abs(u2 - direct)) < 1e-10
    norm = lambda v: np.sqrt(np.trapezoid(np.abs(v) ** 2, x))
    assert abs(norm(direct) - norm(f(x))) < 1e-10


def test_two_dimensional_evolution_is_separable():
    x = hermite_grid(8.0, 128)
    F = hermite_fn(0, x)[:, None] * hermite_fn(0, x)[None, :]
    u = hermite_evolve(F, 0.35, x)
    assert np.max(np.abs(u - np.exp(-2j * 0.35) * F)) < 1e-5


def test_caustics_are_rejected():
    with pytest.raises(CausticError):
        MehlerParams(0.0)
    with pytest.raises(CausticError):
        MehlerParams(math.pi / 2.0)
    with pytest.raises(CausticError):
        mehler_kernel_r(1.0, 0.0, 0.0)
    with pytest.raises(CausticError):
        hermite_evolve(lambda y: np.exp(-y * y), 0.0)
    # close enough to need more quadrature than the budget allows
    with pytest.raises(CausticError, match="budget"):
        hermite_evolve(lambda y: np.exp(-y * y), 1.5e-6)


def test_evolve_input_validation():
    x = hermite_grid(4.0, 64)
    with pytest.raises(ValueError):
        hermite_evolve(lambda y: np.zeros(3), 0.3, x)
    with pytest.raises(ValueError):
        hermite_evolve(np.zeros(17), 0.3, x)
    with pytest.raises(ValueError):
        hermite_grid(-1.0)
    with pytest.raises(ValueError):
        hermite_grid(8.0, nodes=4)


def test_gate_margin_and_boundary_product():
    margin, super_ = hermite_gate(1.0, 1.0, math.pi / 4.0)
    assert margin == pytest.approx(0.75, abs=1e-12) and super_
    margin, super_ = hermite_gate(1.0, 1.0, math.pi / 2.0)
    assert margin == pytest.approx(-0.25, abs=1e-12) and not super_
    with pytest.raises(ValueError):
        hermite_gate(0.0, 1.0, 1.0)

    for a, s0 in [(1.0, math.pi / 8.0), (0.7, 0.5)]:
        b_fit, product = gate_boundary_profile(a, s0)
        assert abs(product - 0.25) < 1e-3, (a, s0)
        want_b = 1.0 / (4.0 * a * math.sin(2.0 * s0) ** 2)
        assert b_fit == pytest.approx(want_b, rel=1e-3)
