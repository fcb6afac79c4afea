"""The named verification suites run by ``spinor-forge verify``."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import equations as eq
from . import majorana as mj
from .algebra import (
    GammaBasis,
    as_basis,
    anticommutator,
    commutator,
    big_gamma,
    change_basis,
    clifford_residual,
    ell5,
    gamma,
    gamma5,
)
from .dirac import (
    dirac_bilinear,
    dirac_residual,
    parity_apply,
    u_spinor,
    v_spinor,
)
from .kinematics import make_momentum, random_momentum, unit_vector
from .report import Check, VerificationReport

DEFAULT_TOLERANCE = 1e-12
INJECTIONS = ("corrupt-spinor", "wrong-sign-mass")


def default_tolerance() -> float:
    raw = os.environ.get("SPINOR_FORGE_TOL")
    if raw is None:
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError("SPINOR_FORGE_TOL must be positive")
    return value


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOLERANCE
    basis: GammaBasis = GammaBasis.CHIRAL
    seed: int = 42
    samples: int = 100
    format: str = "text"
    frequency_convention: str = "positive"
    inject: str | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.format!r}")
        if self.frequency_convention not in eq.FREQUENCY_CONVENTIONS:
            raise ValueError(f"unknown frequency convention {self.frequency_convention!r}")
        if self.inject is not None and self.inject not in INJECTIONS:
            raise ValueError(f"unknown injection {self.inject!r}")
        object.__setattr__(self, "basis", as_basis(self.basis))


def merge(suite: str, reports) -> VerificationReport:
    """Fold per-sample reports: worst residual per check id, notes deduplicated."""
    out = VerificationReport(suite)
    worst: dict[str, Check] = {}
    for rep in reports:
        for c in rep.checks:
            prev = worst.get(c.id)
            if prev is None:
                worst[c.id] = c
            elif c.bound == "lower" and c.residual < prev.residual:
                worst[c.id] = c
            elif c.bound == "upper" and c.residual > prev.residual:
                worst[c.id] = c
        for n in rep.notes:
            if n not in out.notes:
                out.notes.append(n)
    out.checks = list(worst.values())
    return out


def _momenta(cfg: RunConfig, stream: int, count: int | None = None):
    rng = np.random.default_rng([cfg.seed, stream])
    return [random_momentum(rng) for _ in range(count or cfg.samples)]


def _other(basis: GammaBasis) -> GammaBasis:
    return GammaBasis.STANDARD if basis is GammaBasis.CHIRAL else GammaBasis.CHIRAL


def suite_clifford(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport("clifford")
    t = 0.01 * cfg.tolerance
    for b in GammaBasis:
        rep.add(f"clifford-{b.value}", "{γ^μ, γ^ν} = 2g^{μν}", clifford_residual(b), t)
        g5 = gamma5(b)
        anti = max(np.abs(anticommutator(g5, gamma(mu, b))).max() for mu in range(4))
        rep.add(f"gamma5-anti-{b.value}", "{γ⁵, γ^μ} = 0", anti, t)
        rep.add(f"gamma5-square-{b.value}", "(γ⁵)² = 1", np.abs(g5 @ g5 - np.eye(4)).max(), t)
    rep.add("gamma5-chiral-diag", "γ⁵_chiral = diag(1, 1, −1, −1)",
            np.abs(gamma5(GammaBasis.CHIRAL) - np.diag([1, 1, -1, -1])).max(), t)
    rep.add("clifford-8", "{Γ^μ, Γ^ν} = 2g^{μν} 1₈",
            clifford_residual(matrices=[big_gamma(mu) for mu in range(4)]), t)
    l5 = ell5()
    rep.add("ell5-commutes", "[𝔏⁵, Γ^μ] = 0, (𝔏⁵)² = 1, tr 𝔏⁵ = 0",
            max([np.abs(commutator(l5, big_gamma(mu))).max() for mu in range(4)]
                + [np.abs(l5 @ l5 - np.eye(8)).max(), abs(np.trace(l5))]), t)
    conv = max(np.abs(change_basis(gamma(mu, "chiral"), "chiral", "standard") - gamma(mu, "standard")).max()
               for mu in range(4))
    rep.add("basis-change", "S γ_chiral S† = γ_standard", conv, t)
    rng = np.random.default_rng([cfg.seed, 1])
    hom = 0.0
    for _ in range(min(cfg.samples, 20)):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        lhs = change_basis(a @ b, "chiral", "standard")
        rhs = change_basis(a, "chiral", "standard") @ change_basis(b, "chiral", "standard")
        hom = max(hom, np.abs(lhs - rhs).max() / max(1.0, np.abs(lhs).max()))
    rep.add("basis-homomorphism", "S(AB)S† = (SAS†)(SBS†)", hom, t)
    return rep


def _spin_set(p, basis):
    return {
        ("u", s): u_spinor(p, s, basis) for s in (0.5, -0.5)
    } | {("v", s): v_spinor(p, s, basis) for s in (0.5, -0.5)}


def suite_dirac_norms(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in _momenta(cfg, 2):
        rep = VerificationReport("dirac-norms")
        for basis in (cfg.basis, _other(cfg.basis)):
            sp = _spin_set(p, basis)
            uu = vv = uv = 0.0
            for s in (0.5, -0.5):
                for s2 in (0.5, -0.5):
                    d = 1.0 if s == s2 else 0.0
                    uu = max(uu, abs(dirac_bilinear(sp[("u", s)], sp[("u", s2)]) - d))
                    vv = max(vv, abs(dirac_bilinear(sp[("v", s)], sp[("v", s2)]) + d))
                    uv = max(uv, abs(dirac_bilinear(sp[("u", s)], sp[("v", s2)])))
            rep.add(f"ubar-u-{basis.value}", "ū_σu_σ′ = +δ_σσ′", uu, cfg.tolerance)
            rep.add(f"vbar-v-{basis.value}", "v̄_σv_σ′ = −δ_σσ′", vv, cfg.tolerance)
            rep.add(f"ubar-v-{basis.value}", "ū_σv_σ′ = 0", uv, cfg.tolerance)
        reps.append(rep)
    return merge("dirac-norms", reps)


def suite_dirac_residuals(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in _momenta(cfg, 3):
        rep = VerificationReport("dirac-residuals")
        scale = p.E + p.m
        res = agree = commute = 0.0
        for build in (u_spinor, v_spinor):
            for s in (0.5, -0.5):
                closed = build(p, s, cfg.basis, route="closed")
                boosted = build(p, s, cfg.basis, route="boost")
                if cfg.inject == "corrupt-spinor" and build is u_spinor:
                    closed = closed.with_components(np.r_[0.0, closed.components[1:]])
                res = max(res, dirac_residual(closed) / scale, dirac_residual(boosted) / scale)
                agree = max(agree, np.abs(closed.components - boosted.components).max())
                other = build(p, s, _other(cfg.basis)).components
                commute = max(commute, np.abs(change_basis(other, _other(cfg.basis), cfg.basis)
                                              - closed.components).max())
        rep.add("equation", "(γ·p − m)u = 0, (γ·p + m)v = 0", res, cfg.tolerance)
        rep.add("routes-agree", "closed form = boosted rest spinor", agree, cfg.tolerance)
        rep.add("basis-commutes", "change_basis(u_other) = u", commute, cfg.tolerance)
        reps.append(rep)
    v_gamma = max(np.abs(gamma5("chiral") @ u_spinor(p, s).components - v_spinor(p, s).components).max()
                  for p in _momenta(cfg, 3, 5) for s in (0.5, -0.5))
    out = merge("dirac-residuals", reps)
    out.add("v-is-gamma5-u", "v = γ⁵u (chiral)", v_gamma, cfg.tolerance)
    return out


def suite_parity(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in _momenta(cfg, 4):
        rep = VerificationReport("parity")
        pu = pv = 0.0
        for s in (0.5, -0.5):
            u = u_spinor(p, s, cfg.basis)
            v = v_spinor(p, s, cfg.basis)
            pu = max(pu, np.abs(parity_apply(u).components - u.components).max())
            pv = max(pv, np.abs(parity_apply(v).components + v.components).max())
        rep.add("Pu", "Pu_σ(p) = +u_σ(p)", pu, cfg.tolerance)
        rep.add("Pv", "Pv_σ(p) = −v_σ(p)", pv, cfg.tolerance)
        reps.append(rep)
    out = merge("parity", reps)
    rest = make_momentum(1.0)
    g0 = gamma(0, cfg.basis)
    eig = max(
        max(np.abs(g0 @ u_spinor(rest, s, cfg.basis).components - u_spinor(rest, s, cfg.basis).components).max(),
            np.abs(g0 @ v_spinor(rest, s, cfg.basis).components + v_spinor(rest, s, cfg.basis).components).max())
        for s in (0.5, -0.5))
    out.add("rest-eigen", "γ⁰u(0) = +u(0), γ⁰v(0) = −v(0)", eig, cfg.tolerance)
    return out


def suite_selfconj(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in _momenta(cfg, 5):
        rep = VerificationReport("selfconj")
        scale = math.sqrt(p.E)
        sc = routes = 0.0
        for lab in mj.LABELS:
            closed = mj.majorana_spinor(lab[0], p, lab[1], lab[2], route="closed")
            boosted = mj.majorana_spinor(lab[0], p, lab[1], lab[2], route="boost")
            sc = max(sc, mj.selfconj_residual(closed) / scale)
            routes = max(routes, np.abs(closed.components - boosted.components).max() / scale)
        rep.add("C-eigen", "Cλ^{S,A} = ±λ^{S,A}, Cρ^{S,A} = ±ρ^{S,A}", sc, cfg.tolerance)
        rep.add("routes-agree", "closed form = boosted rest spinor", routes, cfg.tolerance)
        reps.append(rep)
    out = merge("selfconj", reps)
    rng = np.random.default_rng([cfg.seed, 50])
    c2 = 0.0
    for _ in range(10):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        c2 = max(c2, np.abs(mj.charge_conjugate(mj.charge_conjugate(v)) - v).max() / np.abs(v).max())
    out.add("C-squared", "C² = 1 (θ = 0)", c2, cfg.tolerance)
    return out


def suite_biorthonormal(cfg: RunConfig) -> VerificationReport:
    out = merge("biorthonormal", [mj.biorthonormal_check(p, cfg.tolerance) for p in _momenta(cfg, 6)])
    worst = 0.0
    for total in (0.0, math.pi / 2, math.pi):
        val = mj.phase_pairing(0.4, total - 0.4, norm=1.0)
        worst = max(worst, abs(abs(val) - 2.0 * abs(math.cos(total))))
    out.add("phase-dependence", "|λ̄^S_↑λ^S_↓| = 2N²|cos(θ₁+θ₂)|", worst, cfg.tolerance)
    return out


GENERIC_MOMENTUM = (1.0, 0.3, -0.4, 0.5)


def suite_parity_maps(cfg: RunConfig) -> VerificationReport:
    ps = [make_momentum(1.0), make_momentum(*GENERIC_MOMENTUM)] + _momenta(cfg, 7)
    reps = [mj.parity_map_check(p, cfg.tolerance) for p in ps]
    # non-eigenstate property asserted at the generic momentum only; at large
    # |p|/m the up and down spinors become nearly parallel
    for r in reps[2:]:
        r.checks = [c for c in r.checks if c.id != "not-P-eigen"]
    return merge("parity-maps", reps)


def suite_rho_lambda(cfg: RunConfig) -> VerificationReport:
    ps = [make_momentum(1.0)] + _momenta(cfg, 8)
    return merge("rho-lambda", [mj.rho_lambda_relation_check(p, cfg.tolerance) for p in ps])


def suite_connect(cfg: RunConfig) -> VerificationReport:
    ps = [make_momentum(1.0), make_momentum(3.7)] + _momenta(cfg, 9, 50)
    return merge("connect", [mj.dirac_to_majorana(p, cfg.tolerance) for p in ps])


GAUGE_ANGLES = (math.pi / 6, math.pi / 3, math.pi / 2)


def suite_gauge(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in _momenta(cfg, 10):
        rep = VerificationReport("gauge")
        sp = mj.all_spinors(p)
        sc = inv = 0.0
        before = mj.pairing_matrix(sp)
        cross = np.array([[a[0] != b[0] for b in mj.LABELS] for a in mj.LABELS])
        for a in GAUGE_ANGLES:
            moved = {k: mj.gauge_transform(s, a) for k, s in sp.items()}
            sc = max(sc, max(mj.selfconj_residual(s) for s in moved.values()) / math.sqrt(p.E))
            after = mj.pairing_matrix(moved)
            inv = max(inv, float(np.abs(after - before)[cross].max()) / p.m)
        rep.add("class-preserved", "C[(cos α ∓ iγ⁵ sin α)ψ] = ±(…)ψ", sc, cfg.tolerance)
        rep.add("mass-term-invariant", "λ̄′ρ′ = λ̄ρ", inv, cfg.tolerance)
        reps.append(rep)
    return merge("gauge", reps)


def suite_xi(cfg: RunConfig) -> VerificationReport:
    out = merge("xi", [mj.xi_check(p, cfg.tolerance) for p in _momenta(cfg, 11)])
    # tabulated spinors on the x-z half plane, where the azimuth vanishes
    worst = 0.0
    for p in (make_momentum(1.0), make_momentum(2.0, 0.7, 0.0, -0.4)):
        for e in mj.ETAS:
            lam = mj.lambda_spinor(p, "S", e)
            for which in mj.XI_KINDS:
                worst = max(worst, np.abs(mj.xi_transform(lam, which).components - mj.xi_target(lam, which)).max())
    out.add("tabulated-zero-azimuth", "Ξ identities, σ₃-basis rest spinors at φ = 0", worst, cfg.tolerance)
    return out


def suite_massless_limit(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport("massless-limit")
    pmag = 1.0
    for cls in ("S", "A"):
        for m in (1e-3, 1e-6):
            r = mj.massless_limit_norm(cls, [0, 0, 1], [m], pmag)[0]
            rep.add(f"vanishing-{cls}-m={m:g}", "|λ_↑(p; m)|/√E < 2m/|p|", r, 2 * m / pmag)
        rep.add(f"zero-at-m0-{cls}", "λ_↑ ≡ 0 at m = 0", mj.massless_limit_norm(cls, [0, 0, 1], [0.0], pmag)[0], 0.0)
    closed = np.abs(mj.lambda_spinor(make_momentum(0.0, 0, 0, pmag), "S", "up").components).max()
    rep.add("zero-closed-form", "printed λ^S_↑ at m = 0 on axis", closed, 0.0)
    rng = np.random.default_rng([cfg.seed, 12])
    n = unit_vector(rng)
    r = mj.massless_limit_norm("S", n, [1e-6], pmag)[0]
    rep.add("vanishing-generic-direction", "|λ^S_↑|/√E < 2m/|p|, helicity rest spinor", r, 2e-6 / pmag)
    down = mj.massless_limit_norm("S", [0, 0, 1], [1e-6], pmag, eta="down")[0]
    rep.add("down-survives", "|λ^S_↓|/√E stays O(1)", down, 1.0, bound="lower")
    return rep


def suite_coupled(cfg: RunConfig) -> VerificationReport:
    mass_sign = -1.0 if cfg.inject == "wrong-sign-mass" else 1.0
    ps = [make_momentum(1.0)] + _momenta(cfg, 13)
    return merge("coupled", [eq.coupled_check(p, cfg.frequency_convention, cfg.tolerance, mass_sign) for p in ps])


def suite_eight_component(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in [make_momentum(1.0)] + _momenta(cfg, 14):
        rep = VerificationReport("eight-component")
        scale = (p.E + p.m) * math.sqrt(p.E)
        coupled = eq.coupled_residual(p, cfg.frequency_convention)
        both = {"+": max(coupled[:2]), "-": max(coupled[2:])}
        worst = agree = 0.0
        for cls in ("+", "-"):
            r = max(eq.eight_component_residual(eq.eight_spinor(p, cls, e), cfg.frequency_convention)
                    for e in mj.ETAS)
            worst = max(worst, r / scale)
            agree = max(agree, abs(r - both[cls]) / scale)
        rep.add("equation", "[iΓ^μ∂_μ ∓ m]Ψ_(±) = 0", worst, cfg.tolerance)
        rep.add("matches-coupled", "8-component residual = max of its 4-component parts", agree, 0.01 * cfg.tolerance)
        reps.append(rep)
    return merge("eight-component", reps)


def suite_markov(cfg: RunConfig) -> VerificationReport:
    reps = []
    for p in [make_momentum(1.0)] + _momenta(cfg, 15):
        rep = VerificationReport("markov")
        worst = 0.0
        for s in (0.5, -0.5):
            u = u_spinor(p, s, cfg.basis)
            v = u.with_components(gamma5(cfg.basis) @ u.components)
            worst = max(worst, max(eq.markov_pair_residual(u, v)) / (p.E + p.m))
        rep.add("pair-and-sum", "(γ·p ∓ m)ψ₁,₂ = 0 ⇒ γ·pχ = mη, γ·pη = mχ", worst, cfg.tolerance)
        reps.append(rep)
    return merge("markov", reps)


def suite_operator_zoo(cfg: RunConfig) -> VerificationReport:
    rng = np.random.default_rng([cfg.seed, 16])
    dirs = [np.array([0.0, 0.0, 1.0]), np.ones(3) / math.sqrt(3)]
    while len(dirs) < cfg.samples + 2:
        n = unit_vector(rng)
        if n[2] > -0.99:
            dirs.append(n)
    reps = []
    for n in dirs:
        reps.append(eq.diagonalize_helicity(n, cfg.tolerance))
        reps.append(eq.diagonalize_chiral_helicity(n, cfg.tolerance))
    out = merge("operator-zoo", reps)
    out.add("det-U2", "det U₂ = −1", abs(np.linalg.det(eq.u2_matrix()) + 1.0), 0.0)
    out.add("det-U3", "det U₃ = −1", abs(np.linalg.det(eq.u3_matrix()) + 1.0), 0.0)
    out.add("U2-U3-unitary", "U₂U₂† = U₃U₃† = 1",
            max(np.abs(u @ u.conj().T - np.eye(4)).max() for u in (eq.u2_matrix(), eq.u3_matrix())), 0.0)
    out.add("dirac-algebra", "β² = 1, {α^i, β} = 0, {α^i, α^j} = 2δ^{ij}", eq.dirac_algebra_residual(), 0.0)
    return out


def suite_gd1(cfg: RunConfig) -> VerificationReport:
    rng = np.random.default_rng([cfg.seed, 17])
    reps = []
    for _ in range(cfg.samples):
        rep = VerificationReport("gd1")
        m1 = rng.uniform(0.1, 10.0)
        m2 = rng.uniform(-m1, m1)
        p3 = rng.uniform(0.1, 10.0) * m1 * unit_vector(rng)
        p = make_momentum(eq.generalized_mass_shell(m1, m2), *p3)
        scale = p.E + abs(m1) + abs(m2)
        rep.add("kernel", "(γ·p − m₁ − m₂γ⁵)ψ = 0 at p² = m₁² − m₂²",
                eq.generalized_mass_residual(p3, m1, m2) / scale, cfg.tolerance)
        m = rng.uniform(0.1, 10.0)
        p3 = rng.uniform(0.1, 10.0) * m * unit_vector(rng)
        rep.add("massless-not-eta-eigen", "m₁ = m₂: kernel solution not an η eigenstate",
                eq.kernel_eta_ratio(p3, m, m)[0], 0.01, bound="lower")
        rep.add("massless-dirac-control", "m₁ = m₂ = 0: kernel is η-invariant",
                eq.kernel_eta_ratio(p3, 0.0, 0.0)[0], cfg.tolerance)
        reps.append(rep)
    out = merge("gd1", reps)
    out.add("shell-m2-zero", "√(m₁² − 0) = m₁", abs(eq.generalized_mass_shell(2.5, 0.0) - 2.5), 0.0)
    out.add("shell-equal", "√(m² − m²) = 0", eq.generalized_mass_shell(1.7, 1.7), 0.0)
    out.add("shell-2-1", "√(4 − 1) = √3", abs(eq.generalized_mass_shell(2.0, 1.0) - math.sqrt(3.0)), cfg.tolerance)
    out.add("on-axis-not-eta-eigen", "m₁ = m₂ = 1, p ∥ z", eq.kernel_eta_ratio([0, 0, 2.0], 1.0, 1.0)[0],
            0.01, bound="lower")
    return out


def suite_barut(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport("barut")
    rng = np.random.default_rng([cfg.seed, 18])
    worst = 0.0
    cases = [(1.0, 1.0, 1.0)]
    while len(cases) < cfg.samples:
        a, b, m = rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 10)
        if 1 + 4 * a * b / m >= 0:
            cases.append((a, b, m))
    for a, b, m in cases:
        for mu in eq.barut_masses(a, b, m):
            worst = max(worst, eq.barut_residual(mu, a, b, m))
    rep.add("dispersion", "αμ²/m ± μ − β = 0", worst, cfg.tolerance)
    golden = eq.barut_masses(1.0, 1.0, 1.0)
    rep.add("golden-pair", "α = β = m = 1 → μ = (√5 ∓ 1)/2",
            max(abs(golden[0] - (math.sqrt(5) - 1) / 2), abs(golden[1] - (math.sqrt(5) + 1) / 2)), cfg.tolerance)
    rep.add("alpha-zero", "α = 0 → μ = β", abs(eq.barut_masses(0.0, 0.75, 1.0)[0] - 0.75), 0.0)
    small = eq.barut_masses(1e-9, 0.75, 1.0)[0]
    rep.add("alpha-to-zero", "α → 0: lightest mass → β", abs(small - 0.75), 1e-8)
    return rep


def suite_noncommutative(cfg: RunConfig) -> VerificationReport:
    rng = np.random.default_rng([cfg.seed, 19])
    reps = []
    for _ in range(cfg.samples):
        rep = VerificationReport("noncommutative")
        m = rng.uniform(0.1, 10.0)
        p3 = rng.uniform(0.0, 10.0) * m * unit_vector(rng)
        theta = rng.uniform(0.0, 1.0) * m * m * unit_vector(rng)
        num = eq.noncommutative_spectrum(p3, m, theta)
        scale = p3 @ p3 + m * m
        rep.add("closed-vs-eigensolver", "E² = p² + m² ± |θ| (each twice)",
                np.abs(num - eq.noncommutative_closed(p3, m, theta)).max() / scale, cfg.tolerance)
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        rotated = eq.noncommutative_spectrum(p3, m, q @ theta)
        rep.add("rotation-invariant", "spectrum depends on |θ| only", np.abs(rotated - num).max() / scale,
                cfg.tolerance)
        reps.append(eq.noncommutative_chain_check(theta, cfg.tolerance))
        reps.append(rep)
    out = merge("noncommutative", reps)
    ex = eq.noncommutative_spectrum([0, 0, 0], 1.0, [0, 0, 0.1])
    out.add("example", "m = 1, p = 0, θ = 0.1 ẑ → {0.9, 0.9, 1.1, 1.1}",
            np.abs(ex - np.array([0.9, 0.9, 1.1, 1.1])).max(), cfg.tolerance)
    south = eq.noncommutative_chain_check([0.0, 0.0, -0.3], cfg.tolerance)
    out.add("south-pole", "θ on −z: pre-rotated chain",
            max(c.residual for c in south.checks), cfg.tolerance)
    return out


SUITES = {
    "clifford": suite_clifford,
    "dirac-norms": suite_dirac_norms,
    "dirac-residuals": suite_dirac_residuals,
    "parity": suite_parity,
    "selfconj": suite_selfconj,
    "biorthonormal": suite_biorthonormal,
    "parity-maps": suite_parity_maps,
    "rho-lambda": suite_rho_lambda,
    "connect": suite_connect,
    "gauge": suite_gauge,
    "xi": suite_xi,
    "massless-limit": suite_massless_limit,
    "coupled": suite_coupled,
    "eight-component": suite_eight_component,
    "markov": suite_markov,
    "operator-zoo": suite_operator_zoo,
    "gd1": suite_gd1,
    "barut": suite_barut,
    "noncommutative": suite_noncommutative,
}


def run_suites(names, cfg: RunConfig) -> list[VerificationReport]:
    if names == "all" or names == ["all"]:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(", ".join(unknown))
    return [SUITES[n](cfg) for n in names]
