"""On-shell momenta, Wigner boosts of the (1/2,0) and (0,1/2) spinors,
helicity 2-spinors and the azimuthal phase matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import sigma_dot

_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class FourMomentum:
    m: float
    E: float
    px: float
    py: float
    pz: float

    @property
    def p3(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @property
    def p4(self) -> np.ndarray:
        return np.array([self.E, self.px, self.py, self.pz])

    @property
    def pmag(self) -> float:
        return math.sqrt(self.px**2 + self.py**2 + self.pz**2)

    @property
    def p_plus(self) -> float:
        if self.pz >= 0:
            return self.E + self.pz
        return (self.m**2 + self.px**2 + self.py**2) / (self.E - self.pz)

    @property
    def p_minus(self) -> float:
        # E - pz without cancellation near the +z axis
        if self.pz <= 0:
            return self.E - self.pz
        return (self.m**2 + self.px**2 + self.py**2) / (self.E + self.pz)

    @property
    def p_r(self) -> complex:
        return complex(self.px, self.py)

    @property
    def p_l(self) -> complex:
        return complex(self.px, -self.py)

    @property
    def azimuth(self) -> float:
        """Azimuthal angle of the 3-momentum; 0 on the z axis by convention."""
        if self.px == 0.0 and self.py == 0.0:
            return 0.0
        return math.atan2(self.py, self.px)

    @property
    def polar(self) -> float:
        p = self.pmag
        if p == 0.0:
            return 0.0
        return math.acos(max(-1.0, min(1.0, self.pz / p)))

    def reflected(self) -> FourMomentum:
        """Same energy, spatial momentum negated (the parity image)."""
        return FourMomentum(self.m, self.E, -self.px, -self.py, -self.pz)

    def shell_residual(self) -> float:
        return self.E**2 - (self.px**2 + self.py**2 + self.pz**2) - self.m**2


def make_momentum(m: float, px: float = 0.0, py: float = 0.0, pz: float = 0.0) -> FourMomentum:
    m, px, py, pz = float(m), float(px), float(py), float(pz)
    if not all(math.isfinite(x) for x in (m, px, py, pz)):
        raise ValueError("mass and momentum components must be finite")
    if m < 0:
        raise ValueError(f"negative mass {m}")
    if m == 0 and px == py == pz == 0:
        raise ValueError("massless particle cannot have zero momentum")
    return FourMomentum(m, math.sqrt(px * px + py * py + pz * pz + m * m), px, py, pz)


def random_momentum(rng: np.random.Generator, m: float | None = None) -> FourMomentum:
    """m ~ U[0.1, 10], |p| ~ U[0, 10 m], direction uniform on the sphere."""
    if m is None:
        m = rng.uniform(0.1, 10.0)
    pmag = rng.uniform(0.0, 10.0 * m)
    n = unit_vector(rng)
    return make_momentum(m, *(pmag * n))


def unit_vector(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        r = np.linalg.norm(v)
        if r > 1e-8:
            return v / r


@dataclass(frozen=True)
class BoostParameters:
    gamma: float
    beta_gamma: float
    phi: float
    n: np.ndarray

    @property
    def velocity(self) -> float:
        return math.tanh(self.phi)


def boost_parameters(p: FourMomentum) -> BoostParameters:
    if p.m <= 0:
        raise ValueError("massless momentum has infinite rapidity")
    pmag = p.pmag
    n = p.p3 / pmag if pmag > 0 else np.zeros(3)
    # asinh(|p|/m) is accurate at small rapidity where acosh(E/m) is not
    return BoostParameters(p.E / p.m, pmag / p.m, math.asinh(pmag / p.m), n)


def _boost(p: FourMomentum, sign: int) -> np.ndarray:
    if p.m <= 0:
        raise ValueError("Wigner boost needs m > 0 (massless momentum has infinite rapidity)")
    scale = math.sqrt((p.E + p.m) / (2.0 * p.m))
    return scale * (_I2 + sign * sigma_dot(p.p3) / (p.E + p.m))


def lambda_R(p: FourMomentum) -> np.ndarray:
    """exp(+sigma.n phi/2): boost of the right-handed 2-spinor from rest to p."""
    return _boost(p, +1)


def lambda_L(p: FourMomentum) -> np.ndarray:
    """exp(-sigma.n phi/2): boost of the left-handed 2-spinor from rest to p."""
    return _boost(p, -1)


def boost_series(p: FourMomentum, sign: int, terms: int = 60) -> np.ndarray:
    """Taylor series of exp(sign * sigma.n phi / 2), independent of the closed form."""
    bp = boost_parameters(p)
    x = sign * 0.5 * bp.phi * sigma_dot(bp.n)
    out = np.eye(2, dtype=complex)
    term = np.eye(2, dtype=complex)
    for k in range(1, terms):
        term = term @ x / k
        out = out + term
    return out


def xi_helicity(theta: float, phi: float, h: str, alpha: float = 0.0, beta: float = 0.0,
                norm: float = 1.0) -> np.ndarray:
    """Helicity 2-spinor along n = (sin t cos f, sin t sin f, cos t).

    ``h`` is "up" or "down"; ``alpha`` is the overall phase of the up spinor
    and ``beta`` that of the down spinor.
    """
    if norm <= 0:
        raise ValueError("normalization must be positive")
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    e = complex(math.cos(phi), math.sin(phi))
    if h == "up":
        return norm * np.exp(1j * alpha) * np.array([c, s * e], dtype=complex)
    if h == "down":
        return norm * np.exp(1j * beta) * np.array([s, -c * e], dtype=complex)
    raise ValueError(f"helicity label must be 'up' or 'down', got {h!r}")


def helicity_flip_matrix(phi: float, alpha: float = 0.0, beta: float = 0.0) -> np.ndarray:
    """The unitary taking xi_up to xi_down at the same direction."""
    e = complex(math.cos(phi), math.sin(phi))
    return np.exp(1j * (beta - alpha)) * np.array([[0, e.conjugate()], [-e, 0]], dtype=complex)


def unit_direction(theta: float, phi: float) -> np.ndarray:
    return np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])


def xi_matrix(phi: float) -> np.ndarray:
    return np.diag([np.exp(1j * phi), np.exp(-1j * phi)])
