"""Fundamental solutions of (Laplacian - lambda_z)^nu on symmetric spaces of complex type."""

import json as _json

from ._symspace import (
    QuadratureError,
    RootSystem,
    bessel_k,
    bessel_k_asymptotic,
    bessel_k_half_integer,
    bessel_k_quadrature,
    c_function_density,
    casimir_eigenvalue,
    evaluate_ray,
    fundamental_solution,
    hecke_check,
    integral_I_direct,
    integral_I_reduced,
    jacobian_sqrt,
    laplacian_of_pi_plus,
    pair_sum_poly,
    pde_residual_rank1,
    pi_plus,
    pi_plus_poly,
    representation_prefactor,
    residue_check,
    sinh_ratio_product,
    spectral_synthesis,
    u_base_point,
    zonal_spherical,
)
from ._symspace import consistency_report as _consistency_report

__version__ = "0.1.0"


def consistency_report(systems=None, suites=(), tol=None, corrupt_pi_plus=False, corrupt_prefactor_sign=False):
    """Run the consistency report; returns the parsed JSON dict."""
    text = _consistency_report(systems, list(suites), tol, corrupt_pi_plus, corrupt_prefactor_sign)
    return _json.loads(text)


def root_system_info(spec):
    return _json.loads(RootSystem(spec).to_json())
