import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinor_forge.algebra import gamma, gamma5
from spinor_forge.dirac import dirac_bilinear, parity_apply
from spinor_forge.kinematics import make_momentum, xi_helicity
from spinor_forge.majorana import (
    CONNECTION_MATRIX, LABELS, ChargeConjugation, all_spinors, biorthonormal_check, biorthonormal_table,
    charge_conjugate, dirac_basis_set, dirac_to_majorana, expected_table, fit_ratio, gauge_transform,
    helicity_rest_spinor, lambda_spinor, massless_limit_norm, parity_map_check, phase_pairing,
    rho_lambda_residuals, rho_spinor, selfconj_residual, xi_check, xi_transform,
)

comp = st.floats(-20, 20, allow_nan=False)
mass = st.floats(0.1, 10)
momenta = st.builds(make_momentum, mass, comp, comp, comp)


def test_frozen_lambda_S_up():
    # m = 1, pz = 1: hand boost of sqrt(1/2)(0, i, 1, 0) along z
    p = make_momentum(1, 0, 0, 1)
    want = np.array([0, 1j * math.sqrt(2), math.sqrt(2), 0]) / (2 * math.sqrt(math.sqrt(2) + 1))
    assert np.allclose(lambda_spinor(p, "S", "up").components, want, atol=1e-15)


def test_rest_entries():
    p = make_momentum(2.0)
    r = math.sqrt(1.0)
    assert np.allclose(lambda_spinor(p, "S", "up").components, [0, 1j * r, r, 0])
    assert np.allclose(rho_spinor(p, "A", "up").components, [r, 0, 0, 1j * r])


def test_charge_conjugation_matrix():
    c = ChargeConjugation()
    assert np.array_equal(c.matrix, -gamma(2))
    v = np.array([1, 2j, -0.5, 3 + 1j])
    assert np.allclose(c(c(v)), v)
    assert np.allclose(charge_conjugate(v, 0.3), np.exp(0.3j) * c(v))


@given(momenta)
def test_self_and_antiself_conjugacy(p):
    for s in all_spinors(p).values():
        assert selfconj_residual(s) < 1e-12 * math.sqrt(p.E)


@given(momenta)
def test_closed_and_boost_routes_agree(p):
    closed, boosted = all_spinors(p), all_spinors(p, route="boost")
    for key in LABELS:
        assert np.allclose(closed[key].components, boosted[key].components, atol=1e-12 * math.sqrt(p.E))


def test_wrong_class_is_detected():
    s = lambda_spinor(make_momentum(1, 0.2, 0.1, 0.3), "S", "up")
    flipped = s.__class__(**{**s.__dict__, "conj_class": "A"})
    assert selfconj_residual(flipped) > 0.5


@given(momenta)
def test_biorthonormal_within_families(p):
    rep = biorthonormal_check(p)
    assert rep.passed, rep.to_dict()
    tab = biorthonormal_table(p)
    assert abs(tab[0, 1] - (-1j * p.m)) < 1e-12 * p.m


def test_cross_family_pairings_are_not_zero():
    p = make_momentum(1.0, 0.3, 0.2, -0.6)
    tab = biorthonormal_table(p)
    assert np.isnan(expected_table(1.0)[0, 4])
    assert abs(tab[LABELS.index(("lambda", "S", "up")), LABELS.index(("rho", "A", "up"))]) > 0.5


def test_phase_pairing_magnitude():
    for t1, t2 in [(0, 0), (0.3, 0.2), (np.pi / 4, np.pi / 4)]:
        z = phase_pairing(t1, t2)
        assert math.isclose(abs(z), 2 * abs(math.cos(t1 + t2)), abs_tol=1e-12)
        assert abs(z.real) < 1e-12


def test_parity_maps():
    for p in (make_momentum(1.0), make_momentum(1.0, 0.3, -0.4, 0.5)):
        rep = parity_map_check(p)
        assert rep.passed, rep.to_dict()
    p = make_momentum(1.0, 0.3, -0.4, 0.5)
    lam = lambda_spinor(p, "S", "up")
    assert fit_ratio(parity_apply(lam).components, lam.components) > 0.1


@given(momenta)
def test_rho_lambda_relations(p):
    assert max(rho_lambda_residuals(p)) < 1e-12 * math.sqrt(p.E)


def test_rho_lambda_sign_flip_fails():
    assert min(rho_lambda_residuals(make_momentum(1.0, 0.1, 0.2, 0.3), flip_sign=True)) > 1.0


def test_connection_matrix_unitary():
    assert np.allclose(CONNECTION_MATRIX @ CONNECTION_MATRIX.conj().T, np.eye(4), atol=1e-15)


@given(momenta)
def test_dirac_to_majorana(p):
    assert dirac_to_majorana(p).passed
    d = dirac_basis_set(p)
    lam = np.array([lambda_spinor(p, c, e).components for c in ("S", "A") for e in ("up", "down")])
    assert np.allclose(CONNECTION_MATRIX @ d, lam, atol=1e-12 * math.sqrt(p.E + p.m))


@pytest.mark.parametrize("alpha", [np.pi / 6, np.pi / 3, np.pi / 2])
def test_gauge_preserves_class(alpha):
    p = make_momentum(1.3, -0.2, 0.5, 0.8)
    sp = all_spinors(p)
    for s in sp.values():
        assert selfconj_residual(gauge_transform(s, alpha)) < 1e-12
    # the mass term pairing lambda with rho survives the rotation
    lam, rho = sp[("lambda", "S", "up")], sp[("rho", "A", "up")]
    assert abs(dirac_bilinear(gauge_transform(lam, alpha), gauge_transform(rho, alpha))
               - dirac_bilinear(lam, rho)) < 1e-12


def test_gauge_changes_lambda_lambda_pairing():
    p = make_momentum(1.0, 0.0, 0.0, 0.5)
    up, down = lambda_spinor(p, "S", "up"), lambda_spinor(p, "S", "down")
    a = np.pi / 3
    before = dirac_bilinear(up, down)
    after = dirac_bilinear(gauge_transform(up, a), gauge_transform(down, a))
    g = np.cos(2 * a) * np.eye(4) - 1j * np.sin(2 * a) * gamma5()
    assert np.isclose(after, np.conj(up.components) @ gamma(0) @ g @ down.components)
    assert abs(after - before) > 0.1


@given(momenta)
def test_xi_identities(p):
    assert xi_check(p).passed


def test_xi_requires_lambda_S():
    with pytest.raises(ValueError):
        xi_transform(lambda_spinor(make_momentum(1), "A", "up"), "I")


def test_helicity_rest_spinor_phase():
    p = make_momentum(2.0, 0.3, 0.9, -0.2)
    xi = helicity_rest_spinor(p, "up")
    assert np.allclose(xi, math.sqrt(1.0) * np.exp(-0.5j * p.azimuth) * xi_helicity(p.polar, p.azimuth, "up"))


def test_massless_limit():
    for cls in ("S", "A"):
        for m in (1e-3, 1e-6):
            assert massless_limit_norm(cls, [0, 0, 1], [m])[0] < 2 * m
        assert massless_limit_norm(cls, [0, 0, 1], [0.0]) == [0.0]
    assert massless_limit_norm("S", [0, 0, 1], [0.0], eta="down")[0] > 1.0


def test_massless_closed_form_matches_builder():
    m, n = 0.3, np.array([0.6, 0.0, 0.8])
    p = make_momentum(m, *n)
    lam = lambda_spinor(p, "S", "up", rest=helicity_rest_spinor(p, "up"))
    assert math.isclose(np.linalg.norm(lam.components) / math.sqrt(p.E),
                        massless_limit_norm("S", n, [m])[0], rel_tol=1e-12)


def test_invalid_labels():
    p = make_momentum(1)
    with pytest.raises(ValueError):
        lambda_spinor(p, "X", "up")
    with pytest.raises(ValueError):
        rho_spinor(p, "S", "sideways")
    with pytest.raises(ValueError):
        lambda_spinor(make_momentum(0, 0, 0, 1), "S", "up", route="boost")


@pytest.mark.parametrize("m", [1.0, 2.5])
def test_flipped_relation_magnitude_at_rest(m):
    assert np.allclose(rho_lambda_residuals(make_momentum(m), flip_sign=True), 2 * math.sqrt(m))
