"""Self/anti-self charge-conjugate spinors lambda^{S,A} and rho^{S,A}.

All spinors here live in the chiral representation (top 2-block right-handed)
and carry the mass-dimension normalization, rest entries sqrt(m/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .algebra import GammaBasis, blocks, gamma, gamma5
from .dirac import MASS_NORM, dirac_bilinear, parity_apply, u_spinor, v_spinor
from .kinematics import FourMomentum, lambda_L, lambda_R, make_momentum, xi_helicity, xi_matrix
from .report import VerificationReport

WIGNER_THETA = np.array([[0, -1], [1, 0]], dtype=complex)

_C_MATRIX = np.array(
    [[0, 0, 0, -1j], [0, 0, 1j, 0], [0, 1j, 0, 0], [-1j, 0, 0, 0]], dtype=complex
)

FAMILIES = ("lambda", "rho")
CLASSES = ("S", "A")
ETAS = ("up", "down")

# canonical ordering used by tables and the CLI
LABELS = [(f, c, e) for f in FAMILIES for c in CLASSES for e in ETAS]

CONNECTION_MATRIX = 0.5 * np.array(
    [[1, 1j, -1, 1j], [-1j, 1, -1j, -1], [1, -1j, -1, -1j], [1j, 1, 1j, -1]], dtype=complex
)


@dataclass(frozen=True)
class ChargeConjugation:
    """Antilinear C = e^{i theta} M K, with M = -gamma^2 (chiral)."""

    theta: float = 0.0

    @property
    def matrix(self) -> np.ndarray:
        return np.exp(1j * self.theta) * _C_MATRIX

    def __call__(self, v) -> np.ndarray:
        return self.matrix @ np.conj(np.asarray(v, dtype=complex))


def charge_conjugate(v, theta: float = 0.0) -> np.ndarray:
    return ChargeConjugation(theta)(v)


def label(family: str, conj_class: str, eta: str) -> str:
    sym = {"lambda": "λ", "rho": "ρ"}[family]
    return f"{sym}^{conj_class}_{'↑' if eta == 'up' else '↓'}"


@dataclass(frozen=True)
class MajoranaSpinor:
    components: np.ndarray
    family: str
    conj_class: str
    eta: str
    momentum: FourMomentum
    rest: np.ndarray | None = None  # custom rest 2-spinor; None means the tabulated one
    transforms: tuple = ()
    basis: GammaBasis = GammaBasis.CHIRAL

    @property
    def name(self) -> str:
        return label(self.family, self.conj_class, self.eta)

    def at(self, p: FourMomentum) -> MajoranaSpinor:
        build = lambda_spinor if self.family == "lambda" else rho_spinor
        route = "boost" if self.rest is not None else "closed"
        s = build(p, self.conj_class, self.eta, route=route, rest=self.rest)
        for kind, arg in self.transforms:
            s = gauge_transform(s, arg) if kind == "gauge" else xi_transform(s, arg)
        return s

    def with_components(self, components) -> MajoranaSpinor:
        return replace(self, components=np.asarray(components, dtype=complex))


def _check_labels(conj_class: str, eta: str) -> None:
    if conj_class not in CLASSES:
        raise ValueError(f"conjugacy class must be 'S' or 'A', got {conj_class!r}")
    if eta not in ETAS:
        raise ValueError(f"eta must be 'up' or 'down', got {eta!r}")


def table_rest_spinor(m: float, eta: str) -> np.ndarray:
    e = np.array([1, 0] if eta == "up" else [0, 1], dtype=complex)
    return math.sqrt(m / 2.0) * e


def helicity_rest_spinor(p: FourMomentum, eta: str) -> np.ndarray:
    """sqrt(m/2) xi_eta(n) along the momentum, phase -azimuth/2.

    With this phase Xi xi = conj(xi), which the Xi-transform identities need.
    """
    phi = p.azimuth
    return xi_helicity(p.polar, phi, eta, alpha=-phi / 2, beta=-phi / 2, norm=math.sqrt(p.m / 2.0))


def _closed_lambda(p: FourMomentum, conj_class: str, eta: str) -> np.ndarray:
    k = 1.0 / (2.0 * math.sqrt(p.E + p.m))
    s = 1 if conj_class == "S" else -1
    pm, pp, pr, pl = p.p_minus + p.m, p.p_plus + p.m, p.p_r, p.p_l
    if eta == "up":
        c = [s * 1j * pl, s * 1j * pm, pm, -pr]
    else:
        c = [-s * 1j * pp, -s * 1j * pr, -pl, pp]
    return k * np.array(c, dtype=complex)


def _closed_rho(p: FourMomentum, conj_class: str, eta: str) -> np.ndarray:
    k = 1.0 / (2.0 * math.sqrt(p.E + p.m))
    s = 1 if conj_class == "S" else -1
    pm, pp, pr, pl = p.p_minus + p.m, p.p_plus + p.m, p.p_r, p.p_l
    if eta == "up":
        c = [pp, pr, s * 1j * pl, -s * 1j * pp]
    else:
        c = [pl, pm, s * 1j * pm, -s * 1j * pr]
    return k * np.array(c, dtype=complex)


def _resolve(p, conj_class, eta, route, rest):
    _check_labels(conj_class, eta)
    if route not in ("closed", "boost"):
        raise ValueError(f"route must be 'closed' or 'boost', got {route!r}")
    if rest is not None:
        return "boost", np.asarray(rest, dtype=complex)
    if route == "boost":
        if p.m <= 0:
            raise ValueError("boost route needs m > 0; use route='closed' for massless momenta")
        return "boost", table_rest_spinor(p.m, eta)
    return "closed", None


def lambda_spinor(p: FourMomentum, conj_class: str, eta: str, route: str = "closed",
                  rest=None) -> MajoranaSpinor:
    """lambda^{S,A}(p) = (+/- i Theta phi_L*(p), phi_L(p)).

    ``rest`` replaces the tabulated rest 2-spinor phi_L(0); it forces the boost
    route.
    """
    route, phi0 = _resolve(p, conj_class, eta, route, rest)
    if route == "closed":
        comps = _closed_lambda(p, conj_class, eta)
    else:
        s = 1 if conj_class == "S" else -1
        phi_l = lambda_L(p) @ phi0
        comps = np.concatenate([s * 1j * WIGNER_THETA @ np.conj(phi_l), phi_l])
    return MajoranaSpinor(comps, "lambda", conj_class, eta, p, None if rest is None else phi0)


def rho_spinor(p: FourMomentum, conj_class: str, eta: str, route: str = "closed",
               rest=None) -> MajoranaSpinor:
    """rho^{S,A}(p) = (phi_R(p), -/+ i Theta phi_R*(p))."""
    route, phi0 = _resolve(p, conj_class, eta, route, rest)
    if route == "closed":
        comps = _closed_rho(p, conj_class, eta)
    else:
        s = 1 if conj_class == "S" else -1
        phi_r = lambda_R(p) @ phi0
        comps = np.concatenate([phi_r, -s * 1j * WIGNER_THETA @ np.conj(phi_r)])
    return MajoranaSpinor(comps, "rho", conj_class, eta, p, None if rest is None else phi0)


def majorana_spinor(family: str, p: FourMomentum, conj_class: str, eta: str, **kw) -> MajoranaSpinor:
    if family == "lambda":
        return lambda_spinor(p, conj_class, eta, **kw)
    if family == "rho":
        return rho_spinor(p, conj_class, eta, **kw)
    raise ValueError(f"family must be 'lambda' or 'rho', got {family!r}")


def all_spinors(p: FourMomentum, route: str = "closed") -> dict:
    return {lab: majorana_spinor(lab[0], p, lab[1], lab[2], route=route) for lab in LABELS}


def selfconj_residual(s: MajoranaSpinor, theta: float = 0.0) -> float:
    sign = 1.0 if s.conj_class == "S" else -1.0
    return float(np.linalg.norm(charge_conjugate(s.components, theta) - sign * s.components))


def biorthonormal_table(p: FourMomentum) -> np.ndarray:
    """8x8 Dirac-conjugate pairings psi_a-bar psi_b in LABELS order."""
    return pairing_matrix(all_spinors(p))


def pairing_matrix(spinors: dict) -> np.ndarray:
    """All psi_a-bar psi_b at once, rows and columns in LABELS order."""
    a = np.array([spinors[k].components for k in LABELS])
    return np.conj(a) @ gamma(0, GammaBasis.CHIRAL) @ a.T


# nonzero within-family pairings, in units of i m
EXPECTED_PAIRINGS = {
    (("lambda", "S", "up"), ("lambda", "S", "down")): -1,
    (("lambda", "S", "down"), ("lambda", "S", "up")): +1,
    (("lambda", "A", "up"), ("lambda", "A", "down")): +1,
    (("lambda", "A", "down"), ("lambda", "A", "up")): -1,
    (("rho", "S", "up"), ("rho", "S", "down")): +1,
    (("rho", "S", "down"), ("rho", "S", "up")): -1,
    (("rho", "A", "up"), ("rho", "A", "down")): -1,
    (("rho", "A", "down"), ("rho", "A", "up")): +1,
}


def expected_table(m: float) -> np.ndarray:
    """Within-family expectation; cross-family (lambda-rho) entries are NaN."""
    out = np.full((8, 8), np.nan, dtype=complex)
    for i, a in enumerate(LABELS):
        for j, b in enumerate(LABELS):
            if a[0] == b[0]:
                out[i, j] = 1j * m * EXPECTED_PAIRINGS.get((a, b), 0)
    return out


def biorthonormal_check(p: FourMomentum, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("biorthonormal")
    table = biorthonormal_table(p)
    want = expected_table(p.m)
    within = ~np.isnan(want.real)
    listed = np.zeros((8, 8), dtype=bool)
    for (a, b) in EXPECTED_PAIRINGS:
        listed[LABELS.index(a), LABELS.index(b)] = True
    diff = np.abs(table - np.where(within, want, 0)) / p.m
    rep.add("listed-pairings", "λ̄^S_↑λ^S_↓ = −im, ... (±im pattern)", diff[listed].max(), tol)
    rep.add("unlisted-within-family", "all other λ̄λ, ρ̄ρ pairings vanish", diff[within & ~listed].max(), tol)
    return rep


def fit_ratio(target, psi) -> float:
    """min over scalars c of |target - c psi| / |psi|."""
    psi = np.asarray(psi, dtype=complex)
    target = np.asarray(target, dtype=complex)
    c = np.vdot(psi, target) / np.vdot(psi, psi)
    return float(np.linalg.norm(target - c * psi) / np.linalg.norm(psi))


def _partner(sp: dict, family: str, conj_class: str, eta: str, vec) -> tuple:
    """Best match of ``vec`` among the two eta labels of a family/class."""
    best = None
    for e in ETAS:
        r = float(np.linalg.norm(vec - sp[(family, conj_class, e)].components))
        if best is None or r < best[0]:
            best = (r, e)
    return best


def _other(conj_class: str) -> str:
    return "A" if conj_class == "S" else "S"


def parity_map_check(p: FourMomentum, tol: float = 1e-12) -> VerificationReport:
    """P lambda^{S,A} = rho^{A,S}, P rho^{S,A} = lambda^{A,S}; lambda, rho not P-eigen."""
    rep = VerificationReport("parity-maps")
    sp = all_spinors(p)
    scale = math.sqrt(p.E)
    worst, worst_fit = 0.0, math.inf
    pairing = set()
    for (fam, cls, eta), s in sp.items():
        image = parity_apply(s).components
        target_fam = "rho" if fam == "lambda" else "lambda"
        r, e = _partner(sp, target_fam, _other(cls), eta, image)
        worst = max(worst, r / scale)
        pairing.add("same" if e == eta else "flipped")
        worst_fit = min(worst_fit, fit_ratio(image, s.components))
    rep.add("P-maps", "Pλ^{S,A} = ρ^{A,S}, Pρ^{S,A} = λ^{A,S}", worst, tol)
    rep.add("not-P-eigen", "min_c |Pψ − cψ|/|ψ| for λ, ρ", worst_fit, 0.1, bound="lower")
    rep.note(f"eta pairing under P: {'/'.join(sorted(pairing))}")
    return rep


RHO_LAMBDA_RELATIONS = [
    # (rho label, coefficient, lambda label)
    (("rho", "S", "up"), -1j, ("lambda", "A", "down")),
    (("rho", "S", "down"), 1j, ("lambda", "A", "up")),
    (("rho", "A", "up"), 1j, ("lambda", "S", "down")),
    (("rho", "A", "down"), -1j, ("lambda", "S", "up")),
]


def rho_lambda_residuals(p: FourMomentum, flip_sign: bool = False) -> list[float]:
    sp = all_spinors(p)
    sign = -1 if flip_sign else 1
    return [
        float(np.linalg.norm(sp[r].components - sign * c * sp[lam].components))
        for r, c, lam in RHO_LAMBDA_RELATIONS
    ]


def rho_lambda_relation_check(p: FourMomentum, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("rho-lambda")
    res = rho_lambda_residuals(p)
    rep.add("relations", "ρ^S_↑ = −iλ^A_↓, ρ^S_↓ = iλ^A_↑, ρ^A_↑ = iλ^S_↓, ρ^A_↓ = −iλ^S_↑",
            max(res) / math.sqrt(p.E), tol)
    return rep


def dirac_basis_set(p: FourMomentum, route: str = "closed") -> np.ndarray:
    """Rows u_{+1/2}, u_{-1/2}, v_{+1/2}, v_{-1/2}; chiral, mass dimension, v = gamma5 u."""
    rows = [
        u_spinor(p, 0.5, GammaBasis.CHIRAL, MASS_NORM, route),
        u_spinor(p, -0.5, GammaBasis.CHIRAL, MASS_NORM, route),
        v_spinor(p, 0.5, GammaBasis.CHIRAL, MASS_NORM, route),
        v_spinor(p, -0.5, GammaBasis.CHIRAL, MASS_NORM, route),
    ]
    return np.array([r.components for r in rows])


def dirac_to_majorana(p: FourMomentum, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport("connect")
    mapped = CONNECTION_MATRIX @ dirac_basis_set(p)
    targets = [("lambda", "S", "up"), ("lambda", "S", "down"), ("lambda", "A", "up"), ("lambda", "A", "down")]
    worst = max(
        float(np.linalg.norm(mapped[i] - lambda_spinor(p, c, e).components))
        for i, (_, c, e) in enumerate(targets)
    )
    rep.add("dirac-to-lambda", "(λ^S_↑, λ^S_↓, λ^A_↑, λ^A_↓) = ½ M (u₊, u₋, v₊, v₋)",
            worst / math.sqrt(p.E), tol)
    unitarity = np.abs(CONNECTION_MATRIX @ CONNECTION_MATRIX.conj().T - np.eye(4)).max()
    rep.add("unitary", "M M† = 1", unitarity, 0.01 * tol)
    return rep


def gauge_transform(s: MajoranaSpinor, alpha: float) -> MajoranaSpinor:
    """lambda -> (cos a - i g5 sin a) lambda, rho -> (cos a + i g5 sin a) rho."""
    sign = -1.0 if s.family == "lambda" else 1.0
    g = math.cos(alpha) * np.eye(4) + sign * 1j * math.sin(alpha) * gamma5(GammaBasis.CHIRAL)
    return replace(s, components=g @ s.components, transforms=s.transforms + (("gauge", alpha),))


XI_KINDS = ("I", "II", "III", "IV")


def xi_block(phi: float, which: str) -> np.ndarray:
    x = xi_matrix(phi)
    z = np.zeros((2, 2), dtype=complex)
    if which == "I":
        return blocks(x, z, z, x)
    if which == "II":
        return blocks(1j * x, z, z, -1j * x)
    if which == "III":
        return blocks(z, 1j * x, 1j * x, z)
    if which == "IV":
        return blocks(z, x, -x, z)
    raise ValueError(f"Xi transform must be one of {XI_KINDS}, got {which!r}")


def xi_transform(s: MajoranaSpinor, which: str) -> MajoranaSpinor:
    if s.family != "lambda" or s.conj_class != "S":
        raise ValueError("Xi transforms act on lambda^S spinors")
    comps = xi_block(s.momentum.azimuth, which) @ s.components
    return replace(s, components=comps, transforms=s.transforms + (("xi", which),))


def xi_target(s: MajoranaSpinor, which: str) -> np.ndarray:
    """The conjugate spinor each Xi transform is identified with.

    Uses the lambda^A built from the same rest 2-spinor and eta as ``s``.
    """
    partner = lambda_spinor(s.momentum, "A", s.eta, route="boost" if s.rest is not None else "closed",
                            rest=s.rest).components
    g0 = gamma(0, GammaBasis.CHIRAL)
    return {
        "I": np.conj(partner),
        "II": -1j * np.conj(s.components),
        "III": 1j * g0 @ np.conj(partner),
        "IV": g0 @ np.conj(s.components),
    }[which]


def xi_check(p: FourMomentum, tol: float = 1e-12) -> VerificationReport:
    """Xi identities for lambda^S built on helicity rest spinors."""
    rep = VerificationReport("xi")
    worst_id, worst_cls = 0.0, 0.0
    scale = math.sqrt(p.E)
    for eta in ETAS:
        lam = lambda_spinor(p, "S", eta, rest=helicity_rest_spinor(p, eta))
        for which in XI_KINDS:
            out = xi_transform(lam, which)
            worst_id = max(worst_id, np.linalg.norm(out.components - xi_target(lam, which)) / scale)
            worst_cls = max(worst_cls, selfconj_residual(out) / scale)
    rep.add("identities", "λ′=λ^A*, λ″=−iλ^S*, λ‴=iγ⁰λ^A*, λ^IV=γ⁰λ^S*", worst_id, tol)
    rep.add("class-preserved", "C λ^{(k)} = +λ^{(k)}", worst_cls, tol)
    return rep


def massless_limit_norm(conj_class: str, direction, m_sequence, pmag: float = 1.0,
                        eta: str = "up") -> list[float]:
    """|lambda(p; m)| / sqrt(E) for each m at fixed |p| along ``direction``.

    phi_L(0) is the helicity eigen-2-spinor of sigma.n, so
    Lambda_L phi_L(0) = (E + m -/+ |p|) / (2 sqrt(E + m)) xi, which stays
    finite (and exact) down to m = 0.
    """
    _check_labels(conj_class, eta)
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    theta = math.acos(max(-1.0, min(1.0, n[2])))
    phi = math.atan2(n[1], n[0]) if (n[0] or n[1]) else 0.0
    xi = xi_helicity(theta, phi, eta)
    h = 1.0 if eta == "up" else -1.0
    s = 1 if conj_class == "S" else -1
    out = []
    for m in m_sequence:
        E = math.sqrt(pmag * pmag + m * m)
        # E + m - |p| written without cancellation
        small = m + m * m / (E + pmag)
        amp = (small if h > 0 else E + m + pmag) / (2.0 * math.sqrt(E + m))
        phi_l = amp * xi
        vec = np.concatenate([s * 1j * WIGNER_THETA @ np.conj(phi_l), phi_l])
        out.append(float(np.linalg.norm(vec) / math.sqrt(E)))
    return out


def phase_pairing(theta1: float, theta2: float, norm: float = 1.0, p: FourMomentum | None = None) -> complex:
    """lambda^S_up-bar lambda^S_down with rest spinors N e^{i t1}(1,0), N e^{i t2}(0,1)."""
    if p is None:
        p = make_momentum(1.0)
    up = lambda_spinor(p, "S", "up", rest=norm * np.exp(1j * theta1) * np.array([1, 0]))
    down = lambda_spinor(p, "S", "down", rest=norm * np.exp(1j * theta2) * np.array([0, 1]))
    return dirac_bilinear(up, down)
