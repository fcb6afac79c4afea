"""Gamma matrices, Pauli matrices and the Clifford layer.

Everything is a dense ``complex128`` numpy array of shape (2, 2), (4, 4) or
(8, 8).  The metric is g = diag(+1, -1, -1, -1).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class GammaBasis(str, Enum):
    CHIRAL = "chiral"
    STANDARD = "standard"


def as_basis(basis: GammaBasis | str) -> GammaBasis:
    try:
        return GammaBasis(basis)
    except ValueError:
        raise ValueError(f"unknown gamma basis {basis!r}; expected 'chiral' or 'standard'") from None


def blocks(a, b, c, d) -> np.ndarray:
    """Assemble [[a, b], [c, d]] from equal square blocks."""
    return np.block([[a, b], [c, d]]).astype(complex)


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def pauli(i: int) -> np.ndarray:
    if i not in (1, 2, 3):
        raise IndexError(f"Pauli index must be 1, 2 or 3, got {i}")
    return _PAULI[i - 1].copy()


def sigma_dot(v) -> np.ndarray:
    """sigma . v for a real or complex 3-vector."""
    x, y, z = v
    return x * _PAULI[0] + y * _PAULI[1] + z * _PAULI[2]


def _check_mu(mu: int) -> None:
    if mu not in (0, 1, 2, 3):
        raise IndexError(f"Lorentz index must be in 0..3, got {mu}")


def gamma(mu: int, basis: GammaBasis | str = GammaBasis.CHIRAL) -> np.ndarray:
    _check_mu(mu)
    basis = as_basis(basis)
    if basis is GammaBasis.CHIRAL:
        if mu == 0:
            return blocks(_Z2, _I2, _I2, _Z2)
        s = _PAULI[mu - 1]
        return blocks(_Z2, -s, s, _Z2)
    if mu == 0:
        return blocks(_I2, _Z2, _Z2, -_I2)
    s = _PAULI[mu - 1]
    return blocks(_Z2, s, -s, _Z2)


def gammas(basis: GammaBasis | str = GammaBasis.CHIRAL) -> list[np.ndarray]:
    return [gamma(mu, basis) for mu in range(4)]


def gamma5(basis: GammaBasis | str = GammaBasis.CHIRAL) -> np.ndarray:
    g0, g1, g2, g3 = gammas(basis)
    return 1j * g0 @ g1 @ g2 @ g3


def slash(p4, basis: GammaBasis | str = GammaBasis.CHIRAL) -> np.ndarray:
    """gamma^mu p_mu for contravariant components p4 = (E, px, py, pz)."""
    g = gammas(basis)
    e, px, py, pz = p4
    return e * g[0] - px * g[1] - py * g[2] - pz * g[3]


def clifford_residual(basis: GammaBasis | str = GammaBasis.CHIRAL, matrices=None) -> float:
    """Max entrywise |{g^mu, g^nu} - 2 g^{mu nu} 1| over all index pairs.

    ``matrices`` overrides the generators, so a caller can hand in a
    deliberately corrupted set.
    """
    g = gammas(basis) if matrices is None else list(matrices)
    n = g[0].shape[0]
    eye = np.eye(n)
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            r = anticommutator(g[mu], g[nu]) - 2.0 * METRIC[mu, nu] * eye
            worst = max(worst, float(np.abs(r).max()))
    return worst


def big_gamma(mu: int, basis: GammaBasis | str = GammaBasis.CHIRAL) -> np.ndarray:
    _check_mu(mu)
    g = gamma(mu, basis)
    z = np.zeros((4, 4), dtype=complex)
    return blocks(z, g, g, z)


def ell5(basis: GammaBasis | str = GammaBasis.CHIRAL) -> np.ndarray:
    """diag(gamma5, -gamma5), the 8x8 axial charge matrix."""
    g5 = gamma5(basis)
    z = np.zeros((4, 4), dtype=complex)
    return blocks(g5, z, z, -g5)


# gamma_standard = S gamma_chiral S^dagger; S is real symmetric and S @ S = 1
BASIS_CHANGE = blocks(_I2, _I2, _I2, -_I2) / np.sqrt(2.0)


def change_basis(m: np.ndarray, src: GammaBasis | str, dst: GammaBasis | str) -> np.ndarray:
    """Re-express a 4x4 matrix or a 4-vector in another gamma basis."""
    src, dst = as_basis(src), as_basis(dst)
    m = np.asarray(m, dtype=complex)
    if src is dst:
        return m.copy()
    s = BASIS_CHANGE  # self-inverse, so both directions use the same matrix
    if m.ndim == 1:
        return s @ m
    return s @ m @ dagger(s)
