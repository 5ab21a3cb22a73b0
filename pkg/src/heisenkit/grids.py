"""Radial and polar grids shared by the slice-level modules.

A RadialProfile is a sampled function of r > 0 together with the plain-dr
quadrature weights of its grid and the power of r its natural measure
carries (2n-1 for profiles meant to be integrated over C^n).

A PolarGrid is a product of Gauss-Legendre radii and a sphere rule on
S^{2n-1}; n = 1 uses the uniform circle (spectrally exact), n = 2 a product
rule on S^3 exact through polynomial degree ~24.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

from .quadrature import gauss_interval

_CSV_HEADER = ["r", "re", "im"]


@dataclass
class RadialProfile:
    r: np.ndarray
    values: np.ndarray
    weights: np.ndarray | None = None
    weight_power: float = 0.0

    def __post_init__(self):
        self.r = np.asarray(self.r, dtype=float)
        self.values = np.asarray(self.values)
        if self.r.ndim != 1 or self.values.shape != self.r.shape:
            raise ValueError("values must be sampled on the radial grid")
        if np.any(self.r < 0) or np.any(np.diff(self.r) <= 0):
            raise ValueError("radii must be nonnegative and strictly increasing")
        if self.weights is not None:
            self.weights = np.asarray(self.weights, dtype=float)
            if self.weights.shape != self.r.shape:
                raise ValueError("weights must match the radial grid")

    def integrate(self):
        """Integral of values * r^weight_power dr on the stored grid."""
        if self.weights is None:
            raise ValueError("profile carries no quadrature weights")
        return np.sum(self.weights * self.values * self.r ** self.weight_power)

    def to_csv(self, path):
        vals = np.asarray(self.values, dtype=complex)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(_CSV_HEADER)
            for r, v in zip(self.r, vals):
                writer.writerow([f"{r:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"])

    @classmethod
    def from_csv(cls, path):
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if header != _CSV_HEADER:
                raise ValueError(f"expected header {_CSV_HEADER}, got {header}")
            rows = [(float(a), float(b), float(c)) for a, b, c in reader]
        r = np.array([row[0] for row in rows])
        vals = np.array([complex(row[1], row[2]) for row in rows])
        return cls(r, vals)


def radial_rule(nr=128, r_max=8.0):
    """Gauss-Legendre nodes/weights on [0, r_max] (plain dr weights)."""
    if r_max <= 0 or nr < 2:
        raise ValueError("need r_max > 0 and at least 2 nodes")
    return gauss_interval(0.0, r_max, nr)


def circle_rule(m=64):
    theta = 2.0 * np.pi * np.arange(m) / m
    omega = np.exp(1j * theta)[:, None]
    weights = np.full(m, 2.0 * np.pi / m)
    return theta, omega, weights


def s3_rule(m_angles=28, m_u=14):
    """Product rule on S^3: z = (sqrt(1-u) e^{i a}, sqrt(u) e^{i b}).

    Exact for monomials of total degree <= min(m_angles-1, 2*m_u-1) in each
    angular mode; weights sum to 2 pi^2.
    """
    u, wu = gauss_interval(0.0, 1.0, m_u)
    a = 2.0 * np.pi * np.arange(m_angles) / m_angles
    b = 2.0 * np.pi * np.arange(m_angles) / m_angles
    U, A, B = np.meshgrid(u, a, b, indexing="ij")
    omega = np.stack([np.sqrt(1.0 - U) * np.exp(1j * A),
                      np.sqrt(U) * np.exp(1j * B)], axis=-1).reshape(-1, 2)
    w_angle = (2.0 * np.pi / m_angles) ** 2
    weights = (0.5 * wu[:, None, None] * w_angle
               * np.ones((m_u, m_angles, m_angles))).ravel()
    # surface measure of S^3 is 2 pi^2; the 1/2 above is the Jacobian du part
    return omega, weights


def sphere_area(n):
    """Surface measure of S^{2n-1}: 2 pi^n / Gamma(n)."""
    from math import gamma, pi
    return 2.0 * pi ** n / gamma(n)


@dataclass(frozen=True)
class PolarGrid:
    n: int
    r: np.ndarray
    r_weights: np.ndarray
    omega: np.ndarray           # (ns, n) complex unit vectors
    omega_weights: np.ndarray
    r_max: float
    angles: np.ndarray | None = field(default=None, compare=False)

    def measure(self):
        """(nr, ns) weights for integration over C^n in polar form."""
        return (self.r_weights * self.r ** (2 * self.n - 1))[:, None] * self.omega_weights[None, :]

    def points(self):
        """(nr, ns, n) complex coordinates of all grid nodes."""
        return self.r[:, None, None] * self.omega[None, :, :]

    def same_as(self, other):
        return (self.n == other.n and self.r.shape == other.r.shape
                and self.omega.shape == other.omega.shape
                and np.array_equal(self.r, other.r)
                and np.array_equal(self.omega, other.omega))


@dataclass(frozen=True)
class SpectralSlice:
    """A central-frequency slice f^lam sampled on a polar grid of C^n."""
    lam: float
    grid: PolarGrid
    values: np.ndarray          # (nr, ns) complex

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        shape = (self.grid.r.size, self.grid.omega.shape[0])
        if vals.shape != shape:
            raise ValueError(f"slice values must have shape {shape}, got {vals.shape}")
        area = sphere_area(self.grid.n)
        if abs(float(np.sum(self.grid.omega_weights)) - area) > 1e-12 * area:
            raise ValueError("sphere weights do not sum to the surface area")
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "values", vals)

    @property
    def n(self):
        return self.grid.n

    def norm2(self):
        """L^2(C^n) norm of the slice under the grid measure."""
        return float(np.sqrt(np.sum(self.grid.measure() * np.abs(self.values) ** 2)))


def polar_grid(n=1, nr=128, r_max=8.0, nsphere=None):
    if n == 1:
        nsphere = 64 if nsphere is None else nsphere
        r, wr = radial_rule(nr, r_max)
        theta, omega, ww = circle_rule(nsphere)
        return PolarGrid(1, r, wr, omega, ww, float(r_max), angles=theta)
    if n == 2:
        m = 28 if nsphere is None else nsphere
        r, wr = radial_rule(nr, r_max)
        omega, ww = s3_rule(m_angles=m, m_u=max(14, m // 2))
        return PolarGrid(2, r, wr, omega, ww, float(r_max))
    raise ValueError("polar grids are implemented for n in {1, 2}")
