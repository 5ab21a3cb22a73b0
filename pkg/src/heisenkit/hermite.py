"""Hermite functions, the oscillator propagator kernel, and its decay gate.

The propagator e^{-isH} for H = -Laplacian + |x|^2 has the kernel

    e^{-ins} pi^{-n/2} (1-r^2)^{-n/2}
        exp(-((1+r^2)/(1-r^2))(|x|^2+|y|^2)/2 + (2r/(1-r^2)) x.y),

r = e^{-2is}.  The e^{-ins} factor is the ground-state phase; without it the
formula is the plain generating-function kernel (exposed separately, and the
r = 0 instance of that is the ground-state projector).  Since
Re(1 - e^{-4is}) = 1 - cos 4s >= 0, the principal branch of the complex
square root is the continuous-in-s choice on every caustic-free interval, so
no winding bookkeeping is needed.

Away from small |sin 2s| the kernel oscillates slowly and modest grids do;
close to it the phase gradient grows like L/|sin 2s| and the y-quadrature is
refined automatically to keep the oscillation resolved.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .grids import RadialProfile
from .hankel import fit_gaussian_decay

_CAUSTIC_TOL = 1e-6
_REFINE_CAP = 1 << 21


class CausticError(ValueError):
    """sin 2s is (numerically) zero: the kernel formula degenerates."""


@dataclass(frozen=True)
class MehlerParams:
    s: float
    n: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("dimension n must be a positive integer")
        if abs(math.sin(2.0 * self.s)) <= _CAUSTIC_TOL:
            raise CausticError(f"s = {self.s!r} is a caustic time (sin 2s = 0)")

    @property
    def r(self):
        return complex(np.exp(-2j * self.s))


def hermite_fn(k, x):
    """L^2-normalized Hermite function h_k on the line, by recurrence."""
    if int(k) != k or k < 0:
        raise ValueError("k must be a nonnegative integer")
    x = np.asarray(x, dtype=float)
    h_prev = np.zeros_like(x)
    h = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    for m in range(int(k)):
        h_prev, h = h, x * math.sqrt(2.0 / (m + 1)) * h - math.sqrt(m / (m + 1.0)) * h_prev
    return h


def mehler_kernel_r(r_factor, x, y, n=1):
    """Generating-function kernel sum_k r^k (h-products) at parameter r.

    No propagator phase; r = 0 collapses it to the ground-state projector.
    x, y are bare reals for n = 1 and (..., n) arrays otherwise.
    """
    r = complex(r_factor)
    one = 1.0 - r * r
    if abs(one) <= _CAUSTIC_TOL:
        raise CausticError("kernel parameter has r^2 = 1")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if n == 1:
        x2, y2, xy = x * x, y * y, x * y
    else:
        x2, y2, xy = (x * x).sum(-1), (y * y).sum(-1), (x * y).sum(-1)
    return (np.pi ** (-0.5 * n) * one ** (-0.5 * n)
            * np.exp(-0.5 * ((1 + r * r) / one) * (x2 + y2) + (2.0 * r / one) * xy))


def mehler_kernel(params, x, y):
    """Propagator kernel of e^{-isH} at time params.s (phase included)."""
    return np.exp(-1j * params.n * params.s) \
        * mehler_kernel_r(params.r, x, y, params.n)


def hermite_grid(L=8.0, nodes=512):
    """The default uniform evolution grid on [-L, L]."""
    if L <= 0 or nodes < 16:
        raise ValueError("need L > 0 and a nontrivial node count")
    return np.linspace(-L, L, nodes)


def _evolve_1d(fy_of, s, x, L):
    """u = e^{-isH} f on the 1-d grid x; fy_of(y) supplies f on [-L, L]."""
    grad = L * (abs(math.cos(2 * s) / math.sin(2 * s)) + 1.0 / abs(math.sin(2 * s)))
    n_fine = max(x.size, int(np.ceil(2.0 * L * 2.0 * grad / np.pi)) + 1)
    if n_fine > _REFINE_CAP:
        raise CausticError("so close to a caustic that the quadrature "
                           f"refinement ({n_fine} nodes) exceeds the budget")
    yf = np.linspace(-L, L, n_fine)
    dy = yf[1] - yf[0]
    r = complex(np.exp(-2j * s))
    phase = complex(np.exp(-1j * s))
    out = np.zeros(x.shape, dtype=complex)
    peak = 0.0
    for lo in range(0, n_fine, 8192):
        hi = min(lo + 8192, n_fine)
        fy = np.asarray(fy_of(yf[lo:hi]), dtype=complex)
        peak = max(peak, float(np.abs(fy).max()))
        w = np.full(hi - lo, dy)
        if lo == 0:
            w[0] *= 0.5
        if hi == n_fine:
            w[-1] *= 0.5
        out += mehler_kernel_r(r, x[:, None], yf[lo:hi][None, :], 1) @ (fy * w)
    edge = float(np.max(np.abs(np.asarray(fy_of(np.array([-L, L])), dtype=complex))))
    if peak > 0 and edge > 1e-10 * peak:
        warnings.warn("f has not decayed at the grid boundary; the evolution "
                      "integral is truncated", RuntimeWarning, stacklevel=3)
    return phase * out


def hermite_evolve(f, s, x=None, L=8.0, nodes=512):
    """Apply e^{-isH} by quadrature against the kernel.

    f is a callable on the grid or an array of samples over x (1-d) or
    x cross x (2-d, evolved separably one axis at a time).  Returns samples
    on the same grid.
    """
    if abs(math.sin(2.0 * s)) <= _CAUSTIC_TOL:
        raise CausticError(f"s = {s!r} is a caustic time (sin 2s = 0)")
    if x is None:
        x = hermite_grid(L, nodes)
    x = np.asarray(x, dtype=float)
    span = float(np.max(np.abs(x)))
    if callable(f):
        probe = np.asarray(f(x))
        if probe.shape == x.shape:
            return _evolve_1d(lambda y: f(y), s, x, max(L, span))
        raise ValueError("callable f must map the grid to samples of the same shape")
    # sampled input is only known on the span of x, so the quadrature window
    # cannot extend past it; the truncation warning fires if f is still large
    f = np.asarray(f, dtype=complex)
    if f.shape == x.shape:
        spline = CubicSpline(x, f)
        return _evolve_1d(spline, s, x, span)
    if f.shape == (x.size, x.size):
        half = np.stack([_evolve_1d(CubicSpline(x, f[:, col]), s, x, span)
                         for col in range(x.size)], axis=1)
        return np.stack([_evolve_1d(CubicSpline(x, half[row, :]), s, x, span)
                         for row in range(x.size)], axis=0)
    raise ValueError("samples must live on the grid (1-d) or its square (2-d)")


def hermite_gate(a, b, s0):
    """margin = a b sin^2(2 s0) - 1/4; the flow vanishes when it is positive."""
    if a <= 0 or b <= 0:
        raise ValueError("decay rates must be positive")
    margin = a * b * math.sin(2.0 * s0) ** 2 - 0.25
    return margin, margin > 0


def gate_boundary_profile(a, s0, L=8.0, nodes=512, window=(0.5, 3.0)):
    """Decay rate of the evolved extremal and its gate product.

    The initial datum is the chirped Gaussian e^{-a x^2 - i (cot 2s0 / 2) x^2}
    whose image under e^{-is0 H} is again a Gaussian of rate 1/(4 a sin^2 2s0),
    so the returned product a * b_fit * sin^2(2 s0) sits on the boundary 1/4.
    """
    if a <= 0:
        raise ValueError("a must be positive")
    chirp = 0.5 / math.tan(2.0 * s0)
    x = hermite_grid(L, nodes)
    u = hermite_evolve(lambda y: np.exp(-(a + 1j * chirp) * y * y), s0, x)
    pos = x > 0
    fit = fit_gaussian_decay(RadialProfile(x[pos], np.abs(u[pos])), window)
    return fit.a, a * fit.a * math.sin(2.0 * s0) ** 2
