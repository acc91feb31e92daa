import math

import numpy as np
import pytest
import scipy.special

import symspace as ss


def unit_rho(R):
    r = np.asarray(R.rho)
    return r / np.linalg.norm(r)


def test_root_system_data():
    R = ss.RootSystem("A:2")
    assert (R.rank, R.num_positive, R.weyl_order, R.canonical_nu) == (2, 3, 6, 5)
    assert sorted(map(tuple, R.positive_roots)) == [(0, 1), (1, 0), (1, 1)]
    info = ss.root_system_info("G2")
    assert info["weyl_order"] == 12 and info["num_positive"] == 6
    with pytest.raises(ValueError):
        ss.RootSystem("Q:9")


@pytest.mark.parametrize("spec", ["A1", "A2", "A3", "C2", "G2", "A1xA1"])
def test_exact_harmonicity(spec):
    R = ss.RootSystem(spec)
    assert ss.laplacian_of_pi_plus(R) == "0"
    assert ss.pair_sum_poly(R) == "0"
    assert ss.pi_plus_poly(R) != "0"


def test_pi_plus_at_rho():
    R = ss.RootSystem("A2")
    assert ss.pi_plus(R, R.rho) == pytest.approx(16.0)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5, 2.0, 7.0])
def test_bessel_against_scipy(alpha):
    for x in np.geomspace(1e-3, 50, 25):
        assert ss.bessel_k(alpha, x) == pytest.approx(scipy.special.kv(alpha, x), rel=1e-10)
    assert ss.bessel_k_quadrature(alpha, 2.0) == pytest.approx(scipy.special.kv(alpha, 2.0), rel=1e-8)


def test_bessel_domain():
    with pytest.raises(ValueError):
        ss.bessel_k(1.0, 0.0)


def test_rank_one_spherical_function():
    R = ss.RootSystem("A1")
    rho = np.asarray(R.rho)
    t, s = 1.3, 0.7
    phi = ss.zonal_spherical(R, t * rho, s * rho / rho.dot(rho))
    assert phi == pytest.approx(math.sin(t * s) / (t * math.sinh(s)), abs=1e-12)


def test_fundamental_solution_a1_closed_form():
    R = ss.RootSystem("A1")
    z, r = 1.5, 0.8
    a = math.sqrt(2) * r
    expect = math.pi / 2 * a / (2 * math.sinh(a)) * math.exp(-z * r) / z
    assert ss.fundamental_solution(R, [r], z) == pytest.approx(expect, rel=1e-13)


def test_even_rank_real_and_consistent_with_reduced_oracle():
    R = ss.RootSystem("A2")
    H = unit_rho(R)
    u = ss.fundamental_solution(R, H, 1.0)
    assert abs(u.imag) < 1e-12 * abs(u)
    oracle = ss.representation_prefactor(R, H, 5) * ss.integral_I_reduced(R, H, 1.0, 5)
    assert abs(oracle - u) < 1e-6 * abs(u)


def test_even_rank_against_scipy_k1():
    R = ss.RootSystem("C2")
    H = 1.1 * unit_rho(R)
    z = 0.7
    r = np.linalg.norm(H)
    pp = ss.pi_plus(R, R.rho)
    nu = R.canonical_nu
    expect = (-1) ** nu * math.pi / (pp * math.gamma(nu)) * ss.sinh_ratio_product(R, H) * (r / z) * scipy.special.k1(z * r)
    assert ss.fundamental_solution(R, H, z).real == pytest.approx(expect, rel=1e-12)


def test_ray_and_base_point():
    R = ss.RootSystem("A1")
    u, ratio = ss.evaluate_ray(R, R.rho, [0.0, 1.0, 2.0], 1.0)
    assert u[0] == pytest.approx(ss.u_base_point(R, 1.0))
    assert ratio[0] == pytest.approx(0.5)
    assert u[1].real > u[2].real > 0


def test_residue_and_gaussian_transform():
    r = ss.residue_check(2.0, 1.0)
    assert r["passed"] and r["rhs"] == pytest.approx(math.pi * math.exp(-2) / 2)
    R = ss.RootSystem("A2")
    h = ss.hecke_check(R, unit_rho(R), 2.0)
    assert abs(h["lhs"] - h["rhs_normalized"]) < 1e-6 * abs(h["rhs_normalized"])


def test_pde_residual():
    assert ss.pde_residual_rank1(1.0, 1.0) < 1e-4


def test_consistency_report():
    rep = ss.consistency_report(suites=["harmonicity", "weyl"])
    assert rep["status"] == "pass"
    bad = ss.consistency_report(suites=["harmonicity"], corrupt_pi_plus=True)
    assert bad["status"] == "fail"
    with pytest.raises(ValueError):
        ss.consistency_report(suites=["nope"])
