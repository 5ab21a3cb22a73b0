"""The regularized Schrodinger flow on slices, the sector-wise Hankel
identity for it, the oscillator kernel K_lam, and the decay gates.

The headline identity: evolving a slice by the complex-time kernel and
extracting a (p0, q0, j0) sector coefficient agrees, up to one global
constant, with a chirped Hankel transform of the initial sector coefficient
read at the rescaled radius lam r / (2 sin(lam s0)).  Both pipelines are
implemented independently and compared by the constancy of their ratio.
"""

import math
from dataclasses import dataclass

import numpy as np

from .grids import RadialProfile, polar_grid
from .hankel import fit_gaussian_decay, hankel_transform, plan_from_nodes
from .heisenberg import ComplexTime, heat_kernel_lambda
from .specfun import jtilde_of_square, laguerre_series_sum
from .spherical import build_basis, spherical_coefficients
from .twisted import partial_fourier_t, radial_slice, twisted_convolution

_EXCEPTIONAL_TOL = 1e-6


class ExceptionalLambdaError(ValueError):
    """sin(lam s0) is (numerically) zero; the flow kernel does not exist."""


class DecayDomainError(ValueError):
    """A fitted decay rate left the hyperbolic-width domain 4 rho > |lam|."""


def _reject_exceptional(lam, s0):
    if abs(math.sin(lam * s0)) <= _EXCEPTIONAL_TOL:
        raise ExceptionalLambdaError(
            f"lam = {lam!r} is exceptional for s0 = {s0!r}: |sin(lam s0)| <= {_EXCEPTIONAL_TOL}")


def schrodinger_evolve(f, zeta):
    """u^lam = f^lam *_lam q_zeta^lam; needs Re zeta > 0."""
    if not isinstance(zeta, ComplexTime):
        zeta = ComplexTime(complex(zeta).real, complex(zeta).imag)
    if zeta.eps <= 0:
        raise ValueError("evolution requires a positive regularization eps")
    q = heat_kernel_lambda(zeta, f.lam, f.grid.r, f.n)
    return twisted_convolution(f, radial_slice(f.grid, f.lam, q))


def _ratio_stats(lhs_vals, rhs_vals, mask=None):
    rhs_abs = np.abs(rhs_vals)
    keep = rhs_abs > 1e-8 * float(rhs_abs.max(initial=0.0))
    if mask is not None:
        keep &= mask
    if not keep.any():
        raise ValueError("rhs is degenerate: every node is below threshold")
    ratio = np.asarray(lhs_vals)[keep] / np.asarray(rhs_vals)[keep]
    mean = complex(np.mean(ratio))
    rel_std = float(np.sqrt(np.mean(np.abs(ratio - mean) ** 2)) / abs(mean))
    return {"c_lambda": mean, "rel_std": rel_std, "nodes": int(keep.sum())}


def theorem34_pair(f_values, t_nodes, p0, q0, j0, lam, s0, eps, grid,
                   r_window=(0.2, 3.0), t_weights=None):
    """Grid pipelines for both sides of the sector-Hankel identity.

    f_values samples f(z, t) on grid x t_nodes.  lhs: slice f at lam, evolve
    by eps + i s0, extract the (p0, q0, j0) radial coefficient.  rhs: extract
    the same coefficient of the initial slice, strip t^{p0+q0}, chirp by
    e^{i lam t^2 cot(lam s0)/4}, Hankel-transform at order n+p0+q0-1, read at
    |lam| r / (2|sin(lam s0)|), chirp again, restore r^{p0+q0}.

    Returns (lhs, rhs, stats); stats reports the empirical constant linking
    the two and the relative spread of the pointwise ratio, computed over
    r_window wherever |rhs| clears 1e-8 of its peak.
    """
    _reject_exceptional(lam, s0)
    fsl = partial_fourier_t(f_values, lam, grid, t_nodes, t_weights)
    basis = build_basis(grid.n, p0, q0)
    u = schrodinger_evolve(fsl, ComplexTime(eps, s0))
    lhs = spherical_coefficients(u, basis, j0)

    coef = spherical_coefficients(fsl, basis, j0)
    r = grid.r
    chirp = np.exp(0.25j * lam * r * r / math.tan(lam * s0))
    stripped = coef.values / r ** (p0 + q0) * chirp
    plan = plan_from_nodes(grid.n + p0 + q0 - 1, r, grid.r_weights, grid.r_max)
    kappa = abs(lam / (2.0 * math.sin(lam * s0)))
    hank = hankel_transform(plan, stripped, kappa * r)
    rhs = RadialProfile(r, r ** (p0 + q0) * chirp * hank.values,
                        weights=grid.r_weights, weight_power=2 * grid.n - 1)

    mask = None
    if r_window is not None:
        mask = (r >= r_window[0]) & (r <= r_window[1])
    return lhs, rhs, _ratio_stats(lhs.values, rhs.values, mask)


def theorem34_gaussian_pair(a, lam, s0, eps=1e-3, r=None):
    """Closed-form twin of theorem34_pair for f = q_a, sector (0, 0).

    lhs comes from the complex-time semigroup (the evolved slice is the
    q_{a+eps+i s0} slice); rhs from the complex-Gaussian Hankel transform
    H_0(e^{-c t^2})(s) = (2c)^{-1} e^{-s^2/(4c)}.  No grids, no convolution:
    this is the independent analytic pipeline.
    """
    if a <= 0:
        raise ValueError("a must be positive")
    _reject_exceptional(lam, s0)
    if r is None:
        r = np.linspace(0.2, 3.0, 57)
    r = np.asarray(r, dtype=float)
    root2pi = math.sqrt(2.0 * math.pi)
    lhs_vals = root2pi * heat_kernel_lambda(ComplexTime(a + eps, s0), lam, r, 1)

    chirp = np.exp(0.25j * lam * r * r / math.tan(lam * s0))
    c = 0.25 * lam / math.tanh(lam * a) - 0.25j * lam / math.tan(lam * s0)
    amp = root2pi * (4.0 * math.pi) ** -1 * (lam / math.sinh(lam * a))
    kappa = abs(lam / (2.0 * math.sin(lam * s0)))
    rhs_vals = chirp * amp / (2.0 * c) * np.exp(-((kappa * r) ** 2) / (4.0 * c))

    lhs = RadialProfile(r, lhs_vals)
    rhs = RadialProfile(r, rhs_vals)
    return lhs, rhs, _ratio_stats(lhs_vals, rhs_vals)


def kernel_K(lam, r, t, s0, n, p0, q0, K_terms=400):
    """The sector kernel both as its Laguerre series and in closed form.

    series: sum_k Gamma(k+1)/Gamma(k+m) L_k^{m-1}(x) L_k^{m-1}(y) w^k with
    x = |lam| r^2/2, y = |lam| t^2/2, w = e^{-2i|lam|s0} Abel-damped by
    1 - 1e-6, times e^{-(x+y)/2} and the sector phase e^{-i(n+2p0)|lam|s0}.
    closed: e^{i lam s0 (q0-p0)} (2i sin(|lam|s0))^{-m}
    e^{i lam (r^2+t^2) cot(lam s0)/4} Jt_{m-1}(lam r t/(2 sin(lam s0))),
    m = n+p0+q0.  Returns (series, closed).
    """
    _reject_exceptional(lam, s0)
    m = n + p0 + q0
    mu = abs(lam) * s0
    x = 0.5 * abs(lam) * r * r
    y = 0.5 * abs(lam) * t * t
    w = (1.0 - 1e-6) * np.exp(-2j * mu)
    series = (np.exp(-1j * (n + 2 * p0) * mu) * np.exp(-0.5 * (x + y))
              * laguerre_series_sum(m - 1, x, y, w, K_terms))
    arg = lam * r * t / (2.0 * math.sin(lam * s0))
    closed = (np.exp(1j * lam * s0 * (q0 - p0)) * (2j * math.sin(mu)) ** (-m)
              * np.exp(0.25j * lam * (r * r + t * t) / math.tan(lam * s0))
              * jtilde_of_square(m - 1, arg * arg))
    return complex(series), complex(closed)


@dataclass(frozen=True)
class GateParams:
    a: float
    b: float
    s0: float
    eps: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ValueError("decay rates a, b must be positive")
        if self.s0 == 0:
            raise ValueError("s0 must be nonzero")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")
        if self.lam < 0:
            raise ValueError("lam must be nonnegative")


def uniqueness_gate(gp):
    """Margin of the central decay inequality; positive margin forces the
    sector coefficients to vanish through the Hardy gate.

    margin = [1/(4(a+eps))] [s0^2/(4(b+eps))] [2 sin(lam s0)/(lam s0)]^2 - 1/4
    with the lam = 0 limit of the bracket equal to 4.
    """
    a = gp.a + gp.eps
    b = gp.b + gp.eps
    if gp.lam == 0:
        osc = 4.0
    else:
        x = gp.lam * gp.s0
        osc = (2.0 * math.sin(x) / x) ** 2
    margin = (1.0 / (4.0 * a)) * (gp.s0 ** 2 / (4.0 * b)) * osc - 0.25
    return margin, margin > 0


def gate_lambda_window(a, b, s0, eps=0.0):
    """Largest delta with positive margin on the whole window (0, delta).

    Returns None when already the lam -> 0 limit is not supercritical (no
    window exists).  The margin is strictly decreasing in lam on
    (0, pi/|s0|) and is negative at the endpoint, so bisection applies.
    """

    def margin(lam):
        return uniqueness_gate(GateParams(a, b, s0, eps, lam))[0]

    if margin(0.0) <= 0:
        return None
    lo, hi = 0.0, math.pi / abs(s0)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def equality_case_profile(a, lam, s0, eps=1e-3, grid=None, fit_window=(1.0, 4.0)):
    """The boundary-case slice, its evolved width, and the sharp relation.

    Assembles f^lam(z) = q_a^lam(z) e^{-i lam |z|^2 cot(lam s0)/4} (the
    extremal, with its free constant set to 1), evolves it at eps + i s0,
    fits the Gaussian decay of |u^lam|, converts the raw rate rho back to
    the hyperbolic width b' via tanh(b' lam) = |lam|/(4 rho), and returns
    (f_slice, b', |tanh((a+eps) lam) tanh(b' lam) - sin^2(lam s0)|).
    """
    if a <= 0:
        raise ValueError("a must be positive")
    if lam == 0:
        raise ValueError("lam must be nonzero")
    _reject_exceptional(lam, s0)
    if grid is None:
        grid = polar_grid()
    r = grid.r
    vals = heat_kernel_lambda(ComplexTime(a), lam, r, grid.n) \
        * np.exp(-0.25j * lam * r * r / math.tan(lam * s0))
    f_slice = radial_slice(grid, lam, vals)
    u = schrodinger_evolve(f_slice, ComplexTime(eps, s0))
    prof = RadialProfile(r, np.mean(np.abs(u.values), axis=1))
    rho = fit_gaussian_decay(prof, fit_window).a
    if 4.0 * rho <= abs(lam):
        raise DecayDomainError(
            f"fitted rate {rho:.4g} is outside the width domain for lam = {lam!r}")
    b_fit = math.atanh(abs(lam) / (4.0 * rho)) / abs(lam)
    residual = abs(math.tanh((a + eps) * lam) * math.tanh(b_fit * lam)
                   - math.sin(lam * s0) ** 2)
    return f_slice, b_fit, residual
