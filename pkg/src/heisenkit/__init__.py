"""Numerical harmonic analysis on the Heisenberg group and its relatives.

The package computes the objects behind a family of Hardy-type uniqueness
results for the Schrodinger equation: heat kernels in real and complex time,
twisted convolution, bigraded spherical harmonics with Hecke-Bochner
projections, the Hermite (Mehler) propagator, H-type generalizations with
their partial Radon reduction, and the decay gates that decide when a
solution is forced to vanish.  `verify.run_suite` re-checks every headline
identity numerically; the `heisenkit` console script exposes kernels, suites
and gate sweeps.
"""

from .grids import (PolarGrid, RadialProfile, SpectralSlice, circle_rule,
                    polar_grid, radial_rule, s3_rule, sphere_area)
from .hankel import (DecayFit, DegenerateFitError, HankelPlan,
                     fit_gaussian_decay, hankel_plan, hankel_transform,
                     hardy_gate, plan_from_nodes)
from .heisenberg import (ComplexTime, HeisenbergPoint, group_inverse,
                         group_law, heat_bound_check, heat_kernel,
                         heat_kernel_grid, heat_kernel_lambda)
from .hermite import (CausticError, MehlerParams, gate_boundary_profile,
                      hermite_evolve, hermite_fn, hermite_gate, mehler_kernel)
from .htype import (HTypeHeatKernel, HTypePoint, htype_gate, htype_heat_batch,
                    htype_heat_kernel, partial_radon, radon_heat_profile)
from .propagator import (DecayDomainError, ExceptionalLambdaError, GateParams,
                         equality_case_profile, gate_lambda_window, kernel_K,
                         schrodinger_evolve, theorem34_gaussian_pair,
                         theorem34_pair, uniqueness_gate)
from .quadrature import QuadratureError, adaptive_quad, quad_budget
from .specfun import (bessel_j, bessel_j_tilde, hille_hardy, jtilde_of_square,
                      laguerre, laguerre_fn, laguerre_series_sum)
from .spherical import (BigradedBasis, SolidHarmonic, build_basis,
                        harmonic_part, reconstruct, spherical_coefficients)
from .twisted import (hecke_bochner_check, laguerre_projection,
                      partial_fourier_t, radial_slice, slice_value,
                      twisted_convolution, twisted_convolution_quad)
from .verify import CheckRecord, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BigradedBasis", "CausticError", "CheckRecord", "ComplexTime", "DecayFit",
    "DecayDomainError", "DegenerateFitError", "ExceptionalLambdaError",
    "GateParams", "HankelPlan", "HeisenbergPoint", "HTypeHeatKernel",
    "HTypePoint", "MehlerParams", "PolarGrid", "QuadratureError",
    "RadialProfile", "SolidHarmonic", "SpectralSlice", "SuiteReport",
    "adaptive_quad", "bessel_j", "bessel_j_tilde", "build_basis",
    "circle_rule", "equality_case_profile", "fit_gaussian_decay",
    "gate_boundary_profile", "gate_lambda_window", "group_inverse",
    "group_law", "hankel_plan", "hankel_transform", "hardy_gate",
    "harmonic_part", "heat_bound_check", "heat_kernel", "heat_kernel_grid",
    "heat_kernel_lambda", "hecke_bochner_check", "hermite_evolve",
    "hermite_fn", "hermite_gate", "hille_hardy", "htype_gate",
    "htype_heat_batch", "htype_heat_kernel", "jtilde_of_square", "kernel_K",
    "laguerre", "laguerre_fn", "laguerre_projection", "laguerre_series_sum",
    "mehler_kernel", "partial_fourier_t", "partial_radon", "plan_from_nodes",
    "polar_grid", "quad_budget", "radial_rule", "radial_slice",
    "radon_heat_profile", "reconstruct", "run_suite", "s3_rule",
    "schrodinger_evolve", "slice_value", "sphere_area",
    "spherical_coefficients", "theorem34_gaussian_pair", "theorem34_pair",
    "twisted_convolution", "twisted_convolution_quad", "uniqueness_gate",
]
