import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinor_forge.algebra import GammaBasis, change_basis, gamma, gamma5
from spinor_forge.dirac import (
    MASS_NORM, charge_rest_check, dirac_bilinear, dirac_residual, parity_apply, u_spinor, v_spinor,
)
from spinor_forge.kinematics import make_momentum

comp = st.floats(-20, 20, allow_nan=False)
mass = st.floats(0.1, 10)
SIGMAS = (0.5, -0.5)


def test_rest_spinors_standard_basis():
    p = make_momentum(1, 0, 0, 0)
    assert np.array_equal(u_spinor(p, 0.5, "standard").components, [1, 0, 0, 0])
    assert np.array_equal(u_spinor(p, -0.5, "standard").components, [0, 1, 0, 0])
    assert np.allclose(np.abs(v_spinor(p, 0.5, "standard").components), [0, 0, 1, 0]) or np.allclose(
        np.abs(v_spinor(p, 0.5, "standard").components), [0, 0, 0, 1])


def test_frozen_boosted_u():
    # u_{+1/2}, m = 1, pz = 1, standard basis: sqrt((E+m)/2m) (1, 0, pz/(E+m), 0)
    p = make_momentum(1, 0, 0, 1)
    e = math.sqrt(2)
    n = math.sqrt((e + 1) / 2)
    assert np.allclose(u_spinor(p, 0.5, "standard").components, [n, 0, n / (e + 1), 0], atol=1e-15)


@given(mass, comp, comp, comp)
def test_normalization_table(m, x, y, z):
    p = make_momentum(m, x, y, z)
    for basis in GammaBasis:
        for s1 in SIGMAS:
            for s2 in SIGMAS:
                d = 1.0 if s1 == s2 else 0.0
                assert abs(dirac_bilinear(u_spinor(p, s1, basis), u_spinor(p, s2, basis)) - d) < 1e-12
                assert abs(dirac_bilinear(v_spinor(p, s1, basis), v_spinor(p, s2, basis)) + d) < 1e-12
                assert abs(dirac_bilinear(u_spinor(p, s1, basis), v_spinor(p, s2, basis))) < 1e-12


@given(mass, comp, comp, comp)
def test_equation_and_routes(m, x, y, z):
    p = make_momentum(m, x, y, z)
    for build in (u_spinor, v_spinor):
        for s in SIGMAS:
            for basis in GammaBasis:
                closed = build(p, s, basis)
                boosted = build(p, s, basis, route="boost")
                assert dirac_residual(closed) < 1e-12 * (p.E + m)
                assert dirac_residual(boosted) < 1e-12 * (p.E + m)
                assert np.allclose(closed.components, boosted.components, atol=1e-12 * math.sqrt(p.E + m))


def test_mass_normalization_scales_with_m():
    p = make_momentum(2.5, 0.3, 0.1, -1.0)
    u = u_spinor(p, 0.5, norm=MASS_NORM)
    assert math.isclose(dirac_bilinear(u, u).real, 2.5, rel_tol=1e-12)


def test_v_is_gamma5_u_in_chiral_boost_route():
    p = make_momentum(1.2, 0.5, -0.2, 0.7)
    for s in SIGMAS:
        u, v = u_spinor(p, s, route="boost"), v_spinor(p, s, route="boost")
        assert np.allclose(v.components, gamma5() @ u.components)


def test_massless_unit_norm_rejected():
    with pytest.raises(ValueError):
        u_spinor(make_momentum(0, 0, 0, 1), 0.5)


def test_bad_labels():
    p = make_momentum(1)
    with pytest.raises(ValueError):
        u_spinor(p, 1.5)
    with pytest.raises(ValueError):
        u_spinor(p, 0.5, norm="planck")
    with pytest.raises(ValueError):
        u_spinor(p, route="teleport")


def test_bilinear_basis_mismatch():
    p = make_momentum(1)
    with pytest.raises(ValueError):
        dirac_bilinear(u_spinor(p, basis="chiral"), u_spinor(p, basis="standard"))


def test_basis_conversion_commutes_with_construction():
    p = make_momentum(0.7, -1.1, 0.4, 2.0)
    a = change_basis(u_spinor(p, -0.5, "chiral").components, "chiral", "standard")
    assert np.allclose(a, u_spinor(p, -0.5, "standard").components)


@given(mass, comp, comp, comp)
def test_parity_eigenvalues(m, x, y, z):
    p = make_momentum(m, x, y, z)
    for basis in GammaBasis:
        for s in SIGMAS:
            u = u_spinor(p, s, basis)
            v = v_spinor(p, s, basis)
            assert np.allclose(parity_apply(u).components, u.components, atol=1e-12 * (p.E + m))
            assert np.allclose(parity_apply(v).components, -v.components, atol=1e-12 * (p.E + m))


def test_rest_parity_acts_as_gamma0():
    u = u_spinor(make_momentum(1), 0.5)
    assert np.allclose(gamma(0) @ u.components, u.components)


def test_charge_rest_check():
    a = np.array([1, 1j])
    assert charge_rest_check(a, a) == 1
    assert charge_rest_check(a, -a) == -1
    assert charge_rest_check(a, np.array([1, 0])) is None
    with pytest.raises(ValueError):
        charge_rest_check(np.zeros(2), a)
