"""Dirac u/v spinors, their normalizations, equation residuals and parity."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .algebra import GammaBasis, as_basis, change_basis, gamma, gamma5, slash
from .kinematics import FourMomentum, lambda_L, lambda_R

UNIT_NORM = "unit"  # u-bar u = +1
MASS_NORM = "mass"  # u-bar u = +m, rest entries sqrt(m)
NORM_CONVENTIONS = (UNIT_NORM, MASS_NORM)


@dataclass(frozen=True)
class DiracSpinor:
    components: np.ndarray
    kind: str  # "u" or "v"
    sigma: float  # +0.5 or -0.5
    momentum: FourMomentum
    basis: GammaBasis = GammaBasis.CHIRAL
    norm: str = UNIT_NORM

    def at(self, p: FourMomentum) -> DiracSpinor:
        """The spinor with the same labels rebuilt at another momentum."""
        build = u_spinor if self.kind == "u" else v_spinor
        return build(p, self.sigma, self.basis, self.norm)

    def with_components(self, components) -> DiracSpinor:
        return replace(self, components=np.asarray(components, dtype=complex))


def _check_labels(sigma: float, norm: str) -> None:
    if sigma not in (0.5, -0.5):
        raise ValueError(f"spin projection must be +1/2 or -1/2, got {sigma}")
    if norm not in NORM_CONVENTIONS:
        raise ValueError(f"normalization must be one of {NORM_CONVENTIONS}, got {norm!r}")


def _prefactor(p: FourMomentum, norm: str) -> float:
    # sqrt((E+m)/2m) for unit norm, times sqrt(m) for the mass-dimension one
    if norm == UNIT_NORM:
        if p.m <= 0:
            raise ValueError("unit normalization divides by m; use norm='mass' for m = 0")
        return math.sqrt((p.E + p.m) / (2.0 * p.m))
    return math.sqrt((p.E + p.m) / 2.0)


def _standard_closed(p: FourMomentum, kind: str, sigma: float, norm: str) -> np.ndarray:
    k = _prefactor(p, norm)
    d = p.E + p.m
    if sigma > 0:
        big, small = [1, 0], [p.pz / d, p.p_r / d]
    else:
        big, small = [0, 1], [p.p_l / d, -p.pz / d]
    comps = big + small if kind == "u" else small + big
    return k * np.array(comps, dtype=complex)


def _chiral_boosted(p: FourMomentum, kind: str, sigma: float, norm: str) -> np.ndarray:
    # phi_R(0) = phi_L(0); v = gamma5 u
    rest = np.array([1, 0] if sigma > 0 else [0, 1], dtype=complex)
    rest = rest * (math.sqrt(p.m / 2.0) if norm == MASS_NORM else math.sqrt(0.5))
    u = np.concatenate([lambda_R(p) @ rest, lambda_L(p) @ rest])
    return u if kind == "u" else gamma5(GammaBasis.CHIRAL) @ u


def _build(kind, p, sigma, basis, norm, route) -> DiracSpinor:
    basis = as_basis(basis)
    _check_labels(sigma, norm)
    if route == "closed":
        comps = change_basis(_standard_closed(p, kind, sigma, norm), GammaBasis.STANDARD, basis)
    elif route == "boost":
        comps = change_basis(_chiral_boosted(p, kind, sigma, norm), GammaBasis.CHIRAL, basis)
    else:
        raise ValueError(f"route must be 'closed' or 'boost', got {route!r}")
    return DiracSpinor(comps, kind, sigma, p, basis, norm)


def u_spinor(p: FourMomentum, sigma: float = 0.5, basis: GammaBasis | str = GammaBasis.CHIRAL,
             norm: str = UNIT_NORM, route: str = "closed") -> DiracSpinor:
    """Positive-energy solution of (gamma.p - m) u = 0.

    route="closed" evaluates the standard-representation formulas and rotates
    them into ``basis``; route="boost" stacks (Lambda_R phi(0), Lambda_L phi(0))
    in the chiral representation.  The two agree to rounding.
    """
    return _build("u", p, sigma, basis, norm, route)


def v_spinor(p: FourMomentum, sigma: float = 0.5, basis: GammaBasis | str = GammaBasis.CHIRAL,
             norm: str = UNIT_NORM, route: str = "closed") -> DiracSpinor:
    return _build("v", p, sigma, basis, norm, route)


def dirac_operator(p: FourMomentum, kind: str, basis: GammaBasis | str) -> np.ndarray:
    sign = -1.0 if kind == "u" else 1.0
    return slash(p.p4, basis) + sign * p.m * np.eye(4)


def dirac_residual(s: DiracSpinor) -> float:
    """|(gamma.p - m) u| or |(gamma.p + m) v|."""
    return float(np.linalg.norm(dirac_operator(s.momentum, s.kind, s.basis) @ s.components))


def dirac_bilinear(a, b) -> complex:
    """a-bar b = a^dagger gamma^0 b."""
    if a.basis != b.basis:
        raise ValueError(f"basis mismatch: {a.basis.value} vs {b.basis.value}")
    return complex(np.conj(a.components) @ gamma(0, a.basis) @ b.components)


def parity_apply(s):
    """psi(p) -> gamma^0 psi(-p), for any spinor object that can rebuild itself."""
    image = s.at(s.momentum.reflected())
    return s.with_components(gamma(0, s.basis) @ image.components)


def charge_rest_check(phi_r0, phi_l0, tol: float = 1e-12):
    """+1 or -1 when phi_R(0) = +/- phi_L(0); None when neither holds."""
    phi_r0 = np.asarray(phi_r0, dtype=complex)
    phi_l0 = np.asarray(phi_l0, dtype=complex)
    scale = max(np.linalg.norm(phi_r0), np.linalg.norm(phi_l0))
    if np.linalg.norm(phi_r0) == 0 or np.linalg.norm(phi_l0) == 0:
        raise ValueError("rest 2-spinors must be nonzero")
    if np.linalg.norm(phi_r0 - phi_l0) <= tol * scale:
        return 1
    if np.linalg.norm(phi_r0 + phi_l0) <= tol * scale:
        return -1
    return None
