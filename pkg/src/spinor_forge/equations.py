"""Momentum-space residuals of the dynamical equations, the helicity /
chirality / chiral-helicity operators and their unitary equivalence, the
m1 + m2 gamma5 equation, the Barut mass pair and the noncommutative
mass splitting."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import GammaBasis, big_gamma, blocks, dagger, gamma5, pauli, sigma_dot, slash
from .kinematics import FourMomentum, make_momentum
from .majorana import ETAS, all_spinors, fit_ratio
from .report import VerificationReport

_CHIRAL = GammaBasis.CHIRAL
_Z2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)

# frequency sign of (lambda^S, rho^A) and of (lambda^A, rho^S)
FREQUENCY_CONVENTIONS = {"positive": (1, -1), "negative": (-1, 1)}


def _freq(convention: str) -> tuple[int, int]:
    try:
        return FREQUENCY_CONVENTIONS[convention]
    except KeyError:
        raise ValueError(f"frequency convention must be 'positive' or 'negative', got {convention!r}") from None


def _unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("direction vector must be nonzero")
    return v / n


# -- operator zoo ----------------------------------------------------------

def alpha_matrices() -> list[np.ndarray]:
    return [blocks(pauli(i), _Z2, _Z2, -pauli(i)) for i in (1, 2, 3)]


def beta_matrix() -> np.ndarray:
    return blocks(_Z2, _I2, _I2, _Z2)


def helicity_operator(direction) -> np.ndarray:
    sn = sigma_dot(_unit(direction))
    return blocks(sn, _Z2, _Z2, sn)


def chiral_helicity_operator(direction) -> np.ndarray:
    return -gamma5(_CHIRAL) @ helicity_operator(direction)


@dataclass(frozen=True)
class OperatorZoo:
    h: np.ndarray
    chi: np.ndarray
    eta_op: np.ndarray
    alpha: tuple
    beta: np.ndarray


def operator_zoo(direction) -> OperatorZoo:
    h = helicity_operator(direction)
    g5 = gamma5(_CHIRAL)
    return OperatorZoo(h, g5, -g5 @ h, tuple(alpha_matrices()), beta_matrix())


def alpha_dot(v) -> np.ndarray:
    a = alpha_matrices()
    return v[0] * a[0] + v[1] * a[1] + v[2] * a[2]


def dirac_algebra_residual() -> float:
    """beta^2 = 1, {alpha^i, beta} = 0, {alpha^i, alpha^j} = 2 delta^ij."""
    a, b = alpha_matrices(), beta_matrix()
    eye = np.eye(4)
    r = [np.abs(b @ b - eye).max()]
    for i in range(3):
        r.append(np.abs(a[i] @ b + b @ a[i]).max())
        for j in range(3):
            r.append(np.abs(a[i] @ a[j] + a[j] @ a[i] - 2.0 * (i == j) * eye).max())
    return float(max(r))


# -- unitary chain ---------------------------------------------------------

def u1_block(vector, normalized: bool = True) -> np.ndarray:
    """2x2 matrix U with U (sigma.a) U^-1 = |a| sigma_3."""
    v = np.asarray(vector, dtype=float)
    big = float(np.abs(v).max()) if v.size else 0.0
    if big == 0 or not math.isfinite(big):
        raise ValueError("U1 needs a nonzero finite vector")
    # only the direction matters; rescale so tiny or huge inputs don't under/overflow
    a1, a2, a3 = (float(x) for x in v / big)
    a = math.sqrt(a1 * a1 + a2 * a2 + a3 * a3)
    if a + a3 <= 1e-12 * a:
        raise ValueError("U1 singular direction: vector lies on the -z axis; rotate it first")
    d = a + a3
    u = np.array([[1, complex(a1, -a2) / d], [-complex(a1, a2) / d, 1]], dtype=complex)
    if normalized:
        u = u * math.sqrt(d / (2.0 * a))
    return u


def u1_matrix(vector, normalized: bool = True) -> np.ndarray:
    u = u1_block(vector, normalized)
    return blocks(u, _Z2, _Z2, u)


def u2_matrix() -> np.ndarray:
    return np.eye(4, dtype=complex)[[0, 3, 2, 1]]


def u3_matrix() -> np.ndarray:
    return np.eye(4, dtype=complex)[[0, 2, 1, 3]]


def diagonalizer(vector) -> np.ndarray:
    """Unitary blockdiag(V, V) with V (sigma.a) V^dagger = |a| sigma_3 for any a != 0.

    Uses U1 directly in the upper half-space; below it, rotates by pi about x
    (sigma_1) after diagonalizing -a, so the -z axis is never singular.
    """
    v = np.asarray(vector, dtype=float)
    if v[2] >= 0:
        return u1_matrix(v)
    s1 = pauli(1)
    blk = s1 @ u1_block(-v)
    return blocks(blk, _Z2, _Z2, blk)


def _unitarity(u: np.ndarray) -> float:
    return float(np.abs(u @ dagger(u) - np.eye(u.shape[0])).max())


def diagonalize_helicity(direction, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("helicity-chain")
    n = _unit(direction)
    u1, u3 = diagonalizer(n), u3_matrix()
    h = helicity_operator(n)
    s3 = blocks(pauli(3), _Z2, _Z2, pauli(3))
    g5 = gamma5(_CHIRAL)
    rep.add("U1-unitary", "U₁U₁† = 1", _unitarity(u1), 0.1 * tol)
    rep.add("U1-det", "|det U₁| = 1", abs(abs(np.linalg.det(u1)) - 1.0), 0.1 * tol)
    rep.add("U1-h", "U₁hU₁⁻¹ = diag(σ₃, σ₃)", np.abs(u1 @ h @ np.linalg.inv(u1) - s3).max(), tol)
    rep.add("U3-step", "U₃ diag(σ₃, σ₃) U₃⁻¹ = γ⁵", np.abs(u3 @ s3 @ np.linalg.inv(u3) - g5).max(), tol)
    w = u3 @ u1
    rep.add("composite", "(U₃U₁) h (U₃U₁)⁻¹ = γ⁵", np.abs(w @ h @ np.linalg.inv(w) - g5).max(), tol)
    return rep


def diagonalize_chiral_helicity(direction, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("chiral-helicity-chain")
    n = _unit(direction)
    u1, u2 = diagonalizer(n), u2_matrix()
    zoo = operator_zoo(n)
    a3 = alpha_matrices()[2]
    an = alpha_dot(n)
    rep.add("U1-alpha", "U₁(α·n)U₁⁻¹ = α₃", np.abs(u1 @ an @ np.linalg.inv(u1) - a3).max(), tol)
    rep.add("U2-step", "U₂α₃U₂† = γ⁵", np.abs(u2 @ a3 @ dagger(u2) - zoo.chi).max(), tol)
    rep.add("eta-is-alpha", "η = −γ⁵h = −α·n", np.abs(zoo.eta_op + an).max(), tol)
    want = np.array([-1.0, -1.0, 1.0, 1.0])
    spec = max(np.abs(np.linalg.eigvalsh(op) - want).max() for op in (zoo.h, zoo.chi, zoo.eta_op))
    rep.add("spectra", "spec h = spec γ⁵ = spec η = {±1, ±1}", spec, tol)
    return rep


# -- coupled first-order systems --------------------------------------------

# (lhs spinor, partner spinor, printed mass sign)
COUPLED_EQUATIONS = (
    (("lambda", "S"), ("rho", "A"), -1),
    (("rho", "A"), ("lambda", "S"), -1),
    (("lambda", "A"), ("rho", "S"), +1),
    (("rho", "S"), ("lambda", "A"), +1),
)


def _coupled(p: FourMomentum, convention: str, mass_sign: float):
    f_s, f_a = _freq(convention)
    gp = slash(p.p4, _CHIRAL)
    sp = all_spinors(p)
    residuals, pairing = [], set()
    for (fam, cls), (pfam, pcls), printed in COUPLED_EQUATIONS:
        f = f_s if cls == ("S" if fam == "lambda" else "A") else f_a
        mu = printed * f_s
        worst = 0.0
        for eta in ETAS:
            lhs = f * gp @ sp[(fam, cls, eta)].components
            # the eta partner is fixed by the correct equation, then reused for mass_sign
            _, e = min(
                (float(np.linalg.norm(lhs + mu * p.m * sp[(pfam, pcls, e)].components)), e) for e in ETAS
            )
            r = float(np.linalg.norm(lhs + mass_sign * mu * p.m * sp[(pfam, pcls, e)].components))
            worst = max(worst, r)
            pairing.add("same" if e == eta else "flipped")
        residuals.append(worst)
    return residuals, pairing


def coupled_residual(p: FourMomentum, convention: str = "positive", mass_sign: float = 1.0) -> list[float]:
    """Residuals of the four coupled lambda/rho equations, eta pairing resolved.

    With convention "positive", lambda^S and rho^A are positive-frequency
    (i d -> +p) and lambda^A, rho^S negative-frequency (i d -> -p).
    "negative" swaps the association and with it the mass-term signs.
    ``mass_sign=-1`` flips every mass term (a deliberate failure).
    """
    return _coupled(p, convention, mass_sign)[0]


def coupled_check(p: FourMomentum, convention: str = "positive", tol: float = 1e-12,
                  mass_sign: float = 1.0) -> VerificationReport:
    rep = VerificationReport("coupled")
    res, pairing = _coupled(p, convention, mass_sign)
    scale = (p.E + p.m) * math.sqrt(p.E)
    for r, tag in zip(res, ("λS-ρA", "ρA-λS", "λA-ρS", "ρS-λA")):
        rep.add(tag, f"coupled equation {tag}", r / scale, tol)
    rep.note(f"eta pairing: {'/'.join(sorted(pairing))}")
    return rep


@dataclass(frozen=True)
class EightSpinor:
    components: np.ndarray
    parity_class: str  # "+" = (rho^A, lambda^S), "-" = (rho^S, lambda^A)
    eta: str
    momentum: FourMomentum


def eight_spinor(p: FourMomentum, parity_class: str, eta: str = "up") -> EightSpinor:
    sp = all_spinors(p)
    if parity_class == "+":
        top, bottom = sp[("rho", "A", eta)], sp[("lambda", "S", eta)]
    elif parity_class == "-":
        top, bottom = sp[("rho", "S", eta)], sp[("lambda", "A", eta)]
    else:
        raise ValueError(f"parity class must be '+' or '-', got {parity_class!r}")
    return EightSpinor(np.concatenate([top.components, bottom.components]), parity_class, eta, p)


def big_slash(p4) -> np.ndarray:
    g = [big_gamma(mu, _CHIRAL) for mu in range(4)]
    return p4[0] * g[0] - p4[1] * g[1] - p4[2] * g[2] - p4[3] * g[3]


def eight_component_residual(s: EightSpinor, convention: str = "positive", mass_sign: float = 1.0) -> float:
    """Block max-norm of [f Gamma.p -/+ m] Psi_(+/-).

    Equals the larger of the two corresponding coupled residuals.  The two
    sectors' operators differ only by an overall sign, so ``mass_sign=-1``
    is the meaningful deliberate failure.
    """
    f_s, f_a = _freq(convention)
    f, printed = (f_s, -1) if s.parity_class == "+" else (f_a, +1)
    p = s.momentum
    op = f * big_slash(p.p4) + mass_sign * printed * f_s * p.m * np.eye(8)
    r = op @ s.components
    return float(max(np.linalg.norm(r[:4]), np.linalg.norm(r[4:])))


def markov_pair_residual(psi1, psi2) -> tuple[float, float, float, float]:
    """(gamma.p - m) psi1, (gamma.p + m) psi2, and the sum/difference system.

    Returns |(g.p - m) psi1|, |(g.p + m) psi2|, |g.p chi - m eta|,
    |g.p eta - m chi| with chi, eta = (psi1 +/- psi2)/sqrt(2).
    """
    p = psi1.momentum
    gp = slash(p.p4, psi1.basis)
    a, b = psi1.components, psi2.components
    chi = (a + b) / math.sqrt(2.0)
    eta = (a - b) / math.sqrt(2.0)
    return (
        float(np.linalg.norm(gp @ a - p.m * a)),
        float(np.linalg.norm(gp @ b + p.m * b)),
        float(np.linalg.norm(gp @ chi - p.m * eta)),
        float(np.linalg.norm(gp @ eta - p.m * chi)),
    )


# -- [i g.d - m1 - m2 g5] psi = 0 ------------------------------------------

def generalized_mass_shell(m1: float, m2: float) -> float:
    if m2 * m2 > m1 * m1:
        raise ValueError(f"m2^2 > m1^2 gives a tachyonic shell (m1={m1}, m2={m2})")
    if abs(m1) == abs(m2):
        return 0.0
    return math.sqrt(m1 * m1 - m2 * m2)


def generalized_operator(p: FourMomentum, m1: float, m2: float) -> np.ndarray:
    return slash(p.p4, _CHIRAL) - m1 * np.eye(4) - m2 * gamma5(_CHIRAL)


def generalized_kernel(p3, m1: float, m2: float, rel_threshold: float = 1e-8):
    """On-shell momentum and an orthonormal kernel basis (columns) of the operator."""
    p = make_momentum(generalized_mass_shell(m1, m2), *p3)
    a = generalized_operator(p, m1, m2)
    _, s, vh = np.linalg.svd(a)
    cut = rel_threshold * max(s[0], 1e-300)
    q = dagger(vh)[:, s <= cut]
    if q.shape[1] == 0:
        raise ArithmeticError("no kernel found at the on-shell momentum")
    return p, q


def generalized_mass_residual(p3, m1: float, m2: float) -> float:
    p, q = generalized_kernel(p3, m1, m2)
    a = generalized_operator(p, m1, m2)
    return float(max(np.linalg.norm(a @ q[:, k]) for k in range(q.shape[1])))


def kernel_eta_ratio(p3, m1: float, m2: float) -> tuple[float, np.ndarray]:
    """Largest eigen-fit ratio over kernel solutions, and the solution attaining it.

    eta is a Hermitian involution, so for a unit psi the ratio is
    sqrt(1 - <eta>^2); its maximum over the kernel follows from the range of
    the compressed operator Q^dagger eta Q.
    """
    p, q = generalized_kernel(p3, m1, m2)
    eta = chiral_helicity_operator(p.p3)
    w, v = np.linalg.eigh(dagger(q) @ eta @ q)
    lo, hi = w[0], w[-1]
    if lo <= 0.0 <= hi:
        # mix the extreme eigenvectors so <eta> = 0
        if hi - lo == 0.0:
            c = v[:, 0]
        else:
            t = hi / (hi - lo)
            c = math.sqrt(t) * v[:, 0] + math.sqrt(1.0 - t) * v[:, -1]
    else:
        c = v[:, 0] if abs(lo) < abs(hi) else v[:, -1]
    psi = q @ c
    return fit_ratio(eta @ psi, psi), psi


def not_chiral_eigenstate_check(p3, m1: float, m2: float, threshold: float = 0.01) -> VerificationReport:
    rep = VerificationReport("gd1-eta")
    ratio, _ = kernel_eta_ratio(p3, m1, m2)
    rep.add("not-eta-eigen", "min_c |ηψ − cψ|/|ψ| for a kernel solution", ratio, threshold, bound="lower")
    return rep


# -- Barut equation ---------------------------------------------------------

def _stable_roots(a: float, b: float, c: float) -> list[float]:
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError("complex masses: 1 + 4 alpha beta / m < 0")
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b))
    roots = [q / a]
    if q != 0:
        roots.append(c / q)
    else:
        roots.append(0.0)
    return roots


def barut_masses(alpha: float, beta: float, m: float = 1.0, dedup: float = 1e-10) -> list[float]:
    """Non-negative masses mu of [g.p + alpha p^2/m - beta] psi = 0.

    On a plane wave p^2 = mu^2 and g.p has eigenvalues +/- mu, so
    alpha mu^2/m +/- mu - beta = 0; both branches are kept.
    """
    if m <= 0:
        raise ValueError("reference mass must be positive")
    if alpha == 0:
        return [abs(beta)]
    if 1.0 + 4.0 * alpha * beta / m < 0:
        raise ValueError("complex masses: 1 + 4 alpha beta / m < 0")
    found: list[float] = []
    for branch in (1.0, -1.0):
        for mu in _stable_roots(alpha / m, branch, -beta):
            if not math.isfinite(mu):
                raise OverflowError(f"mass ~ m/alpha overflows for alpha={alpha!r}")
            if mu >= 0 and all(abs(mu - x) > dedup * max(1.0, x) for x in found):
                found.append(mu)
    return sorted(found)


def barut_residual(mu: float, alpha: float, beta: float, m: float = 1.0) -> float:
    """Relative residual of the better-satisfied branch of alpha mu^2/m +/- mu - beta."""
    quad = alpha * mu * mu / m
    scale = abs(quad) + abs(mu) + abs(beta) or 1.0
    return min(abs(quad + mu - beta), abs(quad - mu - beta)) / scale


# -- noncommutative deformation ---------------------------------------------

def noncommutative_operator(p3, m: float, theta) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    return (p3 @ p3 + m * m) * np.eye(4) + alpha_dot(np.asarray(theta, dtype=float))


def noncommutative_spectrum(p3, m: float, theta) -> np.ndarray:
    """E^2 eigenvalues of p^2 + m^2 + alpha.theta, ascending (Hermitian eigensolver)."""
    return np.linalg.eigvalsh(noncommutative_operator(p3, m, theta))


def noncommutative_closed(p3, m: float, theta) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    base = p3 @ p3 + m * m
    t = float(np.linalg.norm(theta))
    return np.array([base - t, base - t, base + t, base + t])


def noncommutative_chain_check(theta, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("noncommutative-chain")
    theta = np.asarray(theta, dtype=float)
    t = float(np.linalg.norm(theta))
    a3 = alpha_matrices()[2]
    if t == 0:
        rep.add("U1-theta", "U₁(α·θ)U₁⁻¹ = α₃|θ|", np.abs(alpha_dot(theta)).max(), tol)
        return rep
    u = diagonalizer(theta)
    u2 = u2_matrix()
    scale = max(1.0, t)
    rep.add("U-unitary", "UU† = 1", _unitarity(u), 0.1 * tol)
    rep.add("U1-theta", "U₁(α·θ)U₁⁻¹ = α₃|θ|", np.abs(u @ alpha_dot(theta) @ dagger(u) - t * a3).max() / scale, tol)
    final = u2 @ u @ alpha_dot(theta) @ dagger(u) @ dagger(u2)
    rep.add("gamma5-split", "U₂U₁(α·θ)U₁⁻¹U₂† = γ⁵|θ|", np.abs(final - t * gamma5(_CHIRAL)).max() / scale, tol)
    return rep
