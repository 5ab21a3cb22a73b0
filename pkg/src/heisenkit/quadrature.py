"""Shared quadrature helpers: panel Gauss-Legendre rules, trapezoid weights,
and a budgeted wrapper around scipy's adaptive integrator."""

import os
import warnings
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate


class QuadratureError(RuntimeError):
    """Adaptive refinement exhausted its budget without converging."""


_DEFAULT_BUDGET = 400


def quad_budget():
    """Subdivision budget for adaptive integrals; HH_QUAD_BUDGET overrides."""
    raw = os.environ.get("HH_QUAD_BUDGET")
    if not raw:
        return _DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HH_QUAD_BUDGET must be an integer, got {raw!r}") from None
    if value < 10:
        raise ValueError("HH_QUAD_BUDGET below 10 is not a usable budget")
    return value


def adaptive_quad(f, a, b, epsabs=1e-12, epsrel=1e-11):
    """Integrate a scalar (possibly complex) function, raising QuadratureError
    instead of letting QUADPACK warnings pass silently."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", category=integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsrel,
                                      limit=quad_budget(), complex_func=True)
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(f"adaptive quadrature did not settle: {exc}") from None
    return value


@lru_cache(maxsize=32)
def _gauss_rule(order):
    x, w = leggauss(order)
    return x, w


def gauss_panels(a, b, panels, order=16):
    """Composite Gauss-Legendre nodes/weights on [a, b] with `panels` panels."""
    if panels < 1:
        raise ValueError("need at least one panel")
    x, w = _gauss_rule(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x).ravel()
    weights = (half[:, None] * np.broadcast_to(w, (panels, order))).ravel()
    return nodes, weights


def gauss_interval(a, b, order):
    """Single-panel Gauss-Legendre rule on [a, b]."""
    return gauss_panels(a, b, 1, order)


def trapezoid_weights(t):
    t = np.asarray(t, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise ValueError("need a one-dimensional grid with at least 2 nodes")
    w = np.empty_like(t)
    w[1:-1] = 0.5 * (t[2:] - t[:-2])
    w[0] = 0.5 * (t[1] - t[0])
    w[-1] = 0.5 * (t[-1] - t[-2])
    return w
