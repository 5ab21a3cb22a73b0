"""Heat kernel on the three-dimensional Heisenberg group.

The kernel lives most naturally in the central frequency variable lam, where
each slice is a Gaussian in |z| with a sinh-modulated width.  Inverting the
Fourier transform in lam gives the kernel as a function of the central
coordinate t, and the pair obeys the parabolic scaling of the group dilations.
"""

import numpy as np

from heisenkit import (HeisenbergPoint, group_law, heat_kernel,
                       heat_kernel_grid, heat_kernel_lambda)

p = HeisenbergPoint((1.0 + 0.0j,), 0.0)
q = HeisenbergPoint((1.0j,), 0.0)
print(f"group law: (1,0) * (i,0) = {group_law(p, q)}")

print("frequency slices q^lam at s = 1, r = 1:")
for lam in (0.5, 1.0, 2.0):
    print(f"  lam = {lam}: {heat_kernel_lambda(1.0, lam, 1.0).real:.12f}")

print("time-domain kernel by Fourier inversion in lam:")
for t in (0.0, 0.5, 1.0):
    val = heat_kernel(1.0, HeisenbergPoint((1.0 + 0.0j,), t))
    print(f"  q_1(1, {t}) = {val.real:.12f}")

rho, t = 0.8, 0.4
big = heat_kernel_grid(4.0, np.array([2.0 * rho]), np.array([4.0 * t]))[0]
ref = heat_kernel_grid(1.0, np.array([rho]), np.array([t]))[0]
print("parabolic scaling q_4s(2z, 4t) = q_s(z, t) / 16:")
print(f"  ratio ref / big = {ref.real / big.real:.12f} (want 16)")
