"""Scalar special functions used throughout: generalized Laguerre polynomials
and Laguerre functions, Bessel J and its normalized variant, and both sides of
the Laguerre product generating identity.

Everything is a pure function of its arguments; scalars in, scalars out, with
numpy broadcasting over the main argument where it is cheap to provide.
"""

import numpy as np
from scipy.special import gammaln

_SERIES_CUTOFF = 12.0   # Bessel power series below, large-argument form above


def _as_array(x):
    a = np.asarray(x, dtype=float)
    return a, a.ndim == 0


def _maybe_scalar(out, scalar):
    return out[()] if scalar else out


def laguerre(k, alpha, t):
    """Generalized Laguerre polynomial L_k^alpha(t) by upward three-term
    recurrence from L_0 and L_1.

    The defining alternating sum cancels catastrophically once k t is large,
    so the recurrence is used for every degree.
    """
    if int(k) != k or k < 0:
        raise ValueError("Laguerre degree k must be a nonnegative integer")
    if alpha <= -1.0:
        raise ValueError("Laguerre order alpha must exceed -1")
    k = int(k)
    t, scalar = _as_array(t)
    if k == 0:
        return _maybe_scalar(np.ones_like(t), scalar)
    prev = np.ones_like(t)
    cur = 1.0 + alpha - t
    for m in range(1, k):
        prev, cur = cur, ((2 * m + 1 + alpha - t) * cur - (m + alpha) * prev) / (m + 1.0)
    return _maybe_scalar(cur, scalar)


def laguerre_fn(k, lam, n, r):
    """Laguerre function L_k^{n-1}(|lam| r^2 / 2) exp(-|lam| r^2 / 4).

    Even in lam by construction; lam = 0 is rejected.
    """
    if int(n) != n or n < 1:
        raise ValueError("dimension n must be a positive integer")
    if lam == 0:
        raise ValueError("lam must be nonzero")
    r, scalar = _as_array(r)
    x = 0.5 * abs(lam) * r * r
    out = np.asarray(laguerre(k, n - 1, x)) * np.exp(-0.5 * x)
    return _maybe_scalar(out, scalar)


def _jt_series(alpha, w2):
    """sum_j (-1)^j (w2/4)^j / (j! Gamma(alpha+j+1)); w2 may be complex."""
    w2 = np.asarray(w2)
    q = 0.25 * w2
    term = np.full(q.shape, np.exp(-gammaln(alpha + 1.0)), dtype=np.result_type(q, float))
    out = term.copy()
    if out.size == 0:
        return out
    for j in range(1, 120):
        term = -term * q / (j * (alpha + j))
        out += term
        if np.max(np.abs(term)) <= 1e-18 * max(float(np.max(np.abs(out))), 1e-300):
            break
    return out


def _bessel_large(alpha, w):
    """Large-argument expansion of J_alpha; w real >= 12 or complex, Re w > 0."""
    w = np.asarray(w)
    mu = 4.0 * alpha * alpha
    p = np.ones(w.shape, dtype=np.result_type(w, float))
    q = np.zeros_like(p)
    c = np.ones_like(p)
    for j in range(1, 24):
        c = c * (mu - (2 * j - 1) ** 2) / (8.0 * j * w)
        sign = (-1) ** (j // 2)
        if j % 2:
            q = q + sign * c
        else:
            p = p + sign * c
    chi = w - (0.5 * alpha + 0.25) * np.pi
    return np.sqrt(2.0 / (np.pi * w)) * (p * np.cos(chi) - q * np.sin(chi))


def bessel_j(alpha, w):
    """Bessel function of the first kind J_alpha(w) for w >= 0, alpha > -1."""
    if alpha <= -1.0:
        raise ValueError("Bessel order alpha must exceed -1")
    w, scalar = _as_array(w)
    if np.any(w < 0):
        raise ValueError("argument must be nonnegative")
    out = np.empty_like(w)
    small = w <= _SERIES_CUTOFF
    ws = w[small]
    with np.errstate(divide="ignore"):
        out[small] = (0.5 * ws) ** alpha * _jt_series(alpha, ws * ws)
    wl = w[~small]
    if wl.size:
        out[~small] = _bessel_large(alpha, wl).real
    return _maybe_scalar(out, scalar)


def bessel_j_tilde(alpha, w):
    """Normalized Bessel (w/2)^{-alpha} J_alpha(w).

    Entire and even in w, with value 1/Gamma(alpha+1) at w = 0.
    """
    if alpha <= -1.0:
        raise ValueError("Bessel order alpha must exceed -1")
    w, scalar = _as_array(w)
    w = np.abs(w)
    out = np.empty_like(w)
    small = w <= _SERIES_CUTOFF
    out[small] = _jt_series(alpha, w[small] ** 2).real
    wl = w[~small]
    if wl.size:
        out[~small] = (0.5 * wl) ** (-alpha) * _bessel_large(alpha, wl).real
    return _maybe_scalar(out, scalar)


def jtilde_of_square(alpha, w2):
    """bessel_j_tilde as an entire function of the squared argument.

    Accepts complex w2, so callers never take a square root of a complex
    number themselves; the principal root used internally is immaterial
    because the function is even.
    """
    w2 = np.atleast_1d(np.asarray(w2, dtype=complex))
    u = np.sqrt(w2)
    out = np.empty_like(w2)
    small = np.abs(u) <= _SERIES_CUTOFF
    out[small] = _jt_series(alpha, w2[small])
    ul = u[~small]
    if ul.size:
        out[~small] = (0.5 * ul) ** (-alpha) * _bessel_large(alpha, ul)
    return out if out.shape != (1,) else out[0]


def laguerre_series_sum(alpha, x, y, w, kmax, tail_window=48):
    """sum_{k<=kmax} Gamma(k+1)/Gamma(k+alpha+1) L_k^a(x) L_k^a(y) w^k.

    For |w| near 1 the partial sums spiral slowly toward the limit; the tail
    is resummed by iterating S -> (S_{k+1} - w S_k)/(1 - w), which strips one
    order of the slowly-varying envelope per pass.  The iteration depth is
    picked a posteriori by successive-difference minimization, so callers pay
    nothing when the plain sum has already settled.
    """
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError("Laguerre series diverges for |w| >= 1")
    boost = abs(w) > 0.85
    if boost and abs(1.0 - w) < 0.04:
        raise ValueError("tail resummation needs w away from the point 1")
    g = np.exp(-gammaln(alpha + 1.0))
    lx_prev = ly_prev = 0.0
    lx = ly = 1.0
    wk = 1.0 + 0.0j
    total = g * wk
    tail = [total]
    settled = 0
    for k in range(1, int(kmax) + 1):
        lx_prev, lx = lx, ((2 * k - 1 + alpha - x) * lx - (k - 1 + alpha) * lx_prev) / k
        ly_prev, ly = ly, ((2 * k - 1 + alpha - y) * ly - (k - 1 + alpha) * ly_prev) / k
        g *= k / (k + alpha)
        wk *= w
        term = g * lx * ly * wk
        total += term
        if boost:
            tail.append(total)
            if len(tail) > tail_window:
                tail.pop(0)
        else:
            settled = settled + 1 if abs(term) <= 1e-17 * max(abs(total), 1e-300) else 0
            if settled >= 4:
                return total
    if not boost:
        return total
    seq = np.array(tail)
    best = seq[-1]
    best_gap = abs(seq[-1] - seq[-2])
    while seq.size >= 3:
        seq = (seq[1:] - w * seq[:-1]) / (1.0 - w)
        gap = abs(seq[-1] - seq[-2])
        if gap < best_gap:
            best, best_gap = seq[-1], gap
    return best


def hille_hardy(alpha, x, y, w, K=None):
    """Both sides of the Laguerre product generating identity.

    lhs: the truncated series (K terms; default chosen from |w|).
    rhs: (1-w)^{-(alpha+1)} exp(-w(x+y)/(1-w)) Jt_alpha(2 sqrt(-xyw)/(1-w)),
    principal powers throughout.  Returned as a pair; nothing is asserted.
    """
    if alpha <= -1.0:
        raise ValueError("order alpha must exceed -1")
    if x < 0 or y < 0:
        raise ValueError("x and y must be nonnegative")
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError("the series diverges for |w| >= 1")
    if K is None:
        K = 600 if abs(w) <= 0.85 else 4000
    if K < 1:
        raise ValueError("need at least one term")
    lhs = laguerre_series_sum(alpha, x, y, w, K)
    one = 1.0 - w
    u2 = -4.0 * x * y * w / (one * one)
    rhs = one ** (-(alpha + 1.0)) * np.exp(-w * (x + y) / one) * jtilde_of_square(alpha, u2)
    return lhs, complex(rhs)
