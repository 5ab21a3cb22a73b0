"""Hankel transforms of Gaussians and the quarter threshold.

A Gaussian e^{-ar^2} transforms to another Gaussian with rate 1/(4a), so the
product of the two decay rates is always exactly 1/4.  That product is the
quantity the uniqueness gates compare against: above 1/4 the pair decays too
fast to be anything but zero.
"""

import numpy as np

from heisenkit import fit_gaussian_decay, hankel_plan, hankel_transform, hardy_gate

plan = hankel_plan(alpha=0.0, r_max=9.0, s_max=5.0)
s = np.linspace(0.0, 5.0, 41)

print("transform of exp(-a r^2) vs (2a)^(-1) exp(-s^2/4a):")
for a in (0.5, 1.0, 2.0):
    out = hankel_transform(plan, np.exp(-a * plan.r_nodes ** 2), s)
    exact = np.exp(-s * s / (4.0 * a)) / (2.0 * a)
    print(f"  a = {a}: max rel error {np.max(np.abs(out.values - exact) / exact):.2e}")

print("fitted decay product a * b for the transform pair:")
for a in (0.3, 1.0, 3.0):
    # size the node window to the rate so the input has decayed by r_max
    wide = hankel_plan(alpha=0.0, r_max=max(9.0, np.sqrt(35.0 / a)), s_max=5.0)
    prof = hankel_transform(wide, np.exp(-a * wide.r_nodes ** 2),
                            np.linspace(0.1, 5.0, 49))
    fit = fit_gaussian_decay(prof)
    print(f"  a = {a}: a*b = {a * fit.a:.10f} (want 0.25)")

print("classification on both sides of the threshold:")
for a, b in ((0.4, 0.4), (0.5, 0.5), (0.7, 0.7)):
    print(f"  a = {a}, b = {b}, ab = {a * b:.2f}: {hardy_gate(a, b)}")
