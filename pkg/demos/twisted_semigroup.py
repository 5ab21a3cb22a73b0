"""Twisted convolution reproduces the heat semigroup slice by slice.

At a fixed central frequency the group convolution becomes the twisted
product on C, and the half-time kernel twisted with itself must return the
full-time kernel.  The product is computed on a polar grid with nothing
assumed about the answer.
"""

import numpy as np

from heisenkit import heat_kernel_lambda, polar_grid, radial_slice, twisted_convolution

lam = 1.0
grid = polar_grid(1, nr=96, r_max=8.0, nsphere=48)

half = radial_slice(grid, lam, heat_kernel_lambda(0.5, lam, grid.r))
conv = twisted_convolution(half, half)
target = heat_kernel_lambda(1.0, lam, grid.r)

mask = grid.r <= 3.0
err = np.max(np.abs(conv.values[mask, :] - target[mask, None]))
print(f"q_1/2 *_lam q_1/2 vs q_1 at lam = {lam} on |z| <= 3:")
print(f"  abs error  {err:.2e}")
print(f"  rel error  {err / np.max(np.abs(target[mask])):.2e}")

conj = twisted_convolution(radial_slice(grid, -lam, half.values[:, 0]),
                           radial_slice(grid, -lam, half.values[:, 0]))
print("flipping lam conjugates the product:")
print(f"  max |conv(-lam) - conj(conv(lam))| = "
      f"{np.max(np.abs(conj.values - np.conj(conv.values))):.2e}")
