"""Command-line front end: ``spinor-forge emit | verify | scan | spectrum``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

import numpy as np

from . import equations as eq
from . import majorana as mj
from .algebra import GammaBasis, change_basis
from .dirac import MASS_NORM, NORM_CONVENTIONS, dirac_residual, u_spinor, v_spinor
from .kinematics import make_momentum
from .suites import INJECTIONS, SUITES, RunConfig, default_tolerance, run_suites

_FRACTION = re.compile(r"^[+-]?\d+/\d+$")
_VECTOR_OPTS = ("--p", "--theta", "--dir", "--theta-dir")

_KINDS = {"u": "u", "v": "v", "λ": "lambda", "lambda": "lambda", "ρ": "rho", "rho": "rho"}
_ETA = {"up": "up", "↑": "up", "down": "down", "↓": "down"}


class UsageError(Exception):
    pass


# -- formatting --------------------------------------------------------------

def fmt_real(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def fmt_complex(z: complex) -> str:
    re_, im = fmt_real(z.real), fmt_real(z.imag)
    if not im.startswith("-"):
        im = "+" + im
    return f"{re_}{im}i"


def jcomplex(z: complex) -> dict:
    return {"re": float(z.real) + 0.0, "im": float(z.imag) + 0.0}


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in r])
    return buf.getvalue()


def dump_text_table(header, rows) -> str:
    cells = [list(header)] + [[fmt_real(x) if isinstance(x, (float, np.floating)) else str(x) for x in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells)


# -- argument parsing ----------------------------------------------------------

def parse_vector(text: str, name: str) -> np.ndarray:
    try:
        v = np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"{name}: expected three comma-separated numbers, got {text!r}") from None
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise UsageError(f"{name}: expected three finite comma-separated numbers, got {text!r}")
    return v


def parse_grid(text: str, name: str) -> np.ndarray:
    """``start:stop:count`` (inclusive linspace) or a single number."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) == 3:
            count = int(parts[2])
            if count < 0:
                raise ValueError
            return np.linspace(float(parts[0]), float(parts[1]), count)
    except ValueError:
        pass
    raise UsageError(f"{name}: expected NUMBER or START:STOP:COUNT, got {text!r}")


def _preprocess(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VECTOR_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        if _FRACTION.match(tok):
            num, den = tok.lstrip("+").split("/")
            tok = repr(float(num) / float(den))
        out.append(tok)
        i += 1
    return out


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    s = argparse.SUPPRESS
    common.add_argument("--tol", type=float, default=s, help="base tolerance (default 1e-12 or $SPINOR_FORGE_TOL)")
    common.add_argument("--basis", choices=[b.value for b in GammaBasis], default=s)
    common.add_argument("--seed", type=int, default=s)
    common.add_argument("--samples", type=int, default=s)
    common.add_argument("--format", choices=("json", "csv", "text"), default=s)
    common.add_argument("--frequency-convention", choices=tuple(eq.FREQUENCY_CONVENTIONS), default=s)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="spinor-forge", parents=[common],
                                     description="Dirac and Majorana-like spinors of the (1/2,0)+(0,1/2) representation")
    sub = parser.add_subparsers(dest="command", required=True)

    emit = sub.add_parser("emit", parents=[common], help="print one spinor")
    emit.add_argument("kind", help="u, v, λ (lambda) or ρ (rho)")
    emit.add_argument("labels", nargs="*", help="u/v: +1/2 or -1/2; λ/ρ: S|A up|down")
    emit.add_argument("--m", type=float, required=True)
    emit.add_argument("--p", default="0,0,0", help="px,py,pz")
    emit.add_argument("--norm", choices=NORM_CONVENTIONS, default="unit", help="u/v normalization")

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suites", nargs="*", default=["all"], help=f"'all' or any of: {', '.join(SUITES)}")
    verify.add_argument("--inject", choices=INJECTIONS, default=None, help="deliberately break one suite")

    scan = sub.add_parser("scan", parents=[common], help="tabulate a quantity over a grid")
    scan.add_argument("quantity", choices=("biorthonormal", "residuals", "spectrum"))
    scan.add_argument("--m", default="1", help="mass value or START:STOP:COUNT")
    scan.add_argument("--pmag", default=None, help="|p| value or grid")
    scan.add_argument("--dir", default="0,0,1", help="momentum direction for --pmag")
    scan.add_argument("--p", default=None, help="fixed 3-momentum (spectrum)")
    scan.add_argument("--theta-mag", default="0", help="|theta| value or grid")
    scan.add_argument("--theta-dir", default="0,0,1")

    spectrum = sub.add_parser("spectrum", parents=[common], help="masses / energies of a deformed equation")
    spectrum.add_argument("kind", choices=("noncommutative", "barut", "gd1"))
    spectrum.add_argument("--m", type=float, default=1.0)
    spectrum.add_argument("--p", default="0,0,0")
    spectrum.add_argument("--theta", default="0,0,0")
    spectrum.add_argument("--alpha", type=float, default=None)
    spectrum.add_argument("--beta", type=float, default=None)
    spectrum.add_argument("--m1", type=float, default=None)
    spectrum.add_argument("--m2", type=float, default=0.0)
    return parser


def make_config(ns, inject=None) -> RunConfig:
    try:
        return RunConfig(
            tolerance=getattr(ns, "tol", None) or default_tolerance(),
            basis=getattr(ns, "basis", "chiral"),
            seed=getattr(ns, "seed", 42),
            samples=getattr(ns, "samples", 100),
            format=getattr(ns, "format", "text"),
            frequency_convention=getattr(ns, "frequency_convention", "positive"),
            inject=inject,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands ------------------------------------------------------------------

def _momentum(m: float, vec) -> object:
    try:
        return make_momentum(m, *vec)
    except ValueError as exc:
        raise UsageError(f"--m/--p: {exc}") from None


def cmd_emit(ns, cfg: RunConfig) -> tuple[str, int]:
    kind = _KINDS.get(ns.kind)
    if kind is None:
        raise UsageError(f"kind: expected u, v, λ/lambda or ρ/rho, got {ns.kind!r}")
    p = _momentum(ns.m, parse_vector(ns.p, "--p"))
    try:
        if kind in ("u", "v"):
            if len(ns.labels) != 1:
                raise UsageError("labels: u/v take exactly one spin label, +1/2 or -1/2")
            try:
                sigma = float(ns.labels[0])
            except ValueError:
                raise UsageError(f"labels: bad spin label {ns.labels[0]!r}") from None
            if sigma not in (0.5, -0.5):
                raise UsageError(f"labels: spin label must be +1/2 or -1/2, got {ns.labels[0]!r}")
            build = u_spinor if kind == "u" else v_spinor
            s = build(p, sigma, cfg.basis, ns.norm)
            name = f"{kind}_{'+' if sigma > 0 else '-'}1/2"
            comps = s.components
            extra = {"norm": ns.norm, "residual": dirac_residual(s)}
        else:
            if len(ns.labels) != 2 or ns.labels[0] not in mj.CLASSES or ns.labels[1] not in _ETA:
                raise UsageError("labels: λ/ρ take a class (S or A) and an eta (up or down)")
            s = mj.majorana_spinor(kind, p, ns.labels[0], _ETA[ns.labels[1]])
            name = s.name
            comps = change_basis(s.components, GammaBasis.CHIRAL, cfg.basis)
            extra = {"norm": MASS_NORM, "selfconj_residual": mj.selfconj_residual(s)}
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    meta = {"E": p.E, "p+": p.p_plus, "p-": p.p_minus, "|psi|": float(np.linalg.norm(comps))}
    if cfg.format == "json":
        doc = {"spinor": name, "basis": cfg.basis.value, "m": p.m, "p": [p.px, p.py, p.pz],
               "components": [jcomplex(z) for z in comps]}
        doc.update(meta)
        doc.update(extra)
        return dump_json(doc), 0
    if cfg.format == "csv":
        return dump_csv(["index", "re", "im"], [(i, float(z.real), float(z.imag)) for i, z in enumerate(comps)]), 0
    lines = [f"{name} ({cfg.basis.value} basis)", ", ".join(fmt_complex(z) for z in comps)]
    lines += [f"{k} = {fmt_real(v)}" for k, v in meta.items()]
    lines += [f"{k} = {v if isinstance(v, str) else fmt_real(v)}" for k, v in extra.items()]
    return "\n".join(lines) + "\n", 0


def cmd_verify(ns, cfg: RunConfig) -> tuple[str, int]:
    try:
        reports = run_suites(ns.suites, cfg)
    except KeyError as exc:
        raise UsageError(f"suites: unknown suite {exc.args[0]}") from None
    ok = all(r.passed for r in reports)
    n_checks = sum(len(r.checks) for r in reports)
    n_fail = sum(r.n_failed for r in reports)
    if cfg.format == "json":
        doc = {
            "config": {"tolerance": cfg.tolerance, "basis": cfg.basis.value, "seed": cfg.seed,
                       "samples": cfg.samples, "frequency_convention": cfg.frequency_convention,
                       "inject": cfg.inject},
            "suites": [r.to_dict() for r in reports],
            "summary": {"suites": len(reports), "checks": n_checks, "failed": n_fail, "pass": ok},
        }
        return dump_json(doc), 0 if ok else 1
    if cfg.format == "csv":
        rows = [(r.suite, c.id, c.anchor, c.residual, c.threshold, c.bound, "pass" if c.passed else "FAIL")
                for r in reports for c in r.checks]
        return dump_csv(["suite", "check", "anchor", "residual", "threshold", "bound", "result"], rows), 0 if ok else 1
    out = []
    for r in reports:
        out.append(f"{'PASS' if r.passed else 'FAIL'} {r.suite} ({r.n_passed}/{len(r.checks)})")
        for c in r.checks:
            rel = "<=" if c.bound == "upper" else ">="
            out.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.id}: {fmt_real(c.residual)} {rel} "
                       f"{fmt_real(c.threshold)}  {c.anchor}")
        out.extend(f"  note: {n}" for n in r.notes)
    out.append(f"{len(reports)} suites, {n_checks} checks, {n_fail} failed")
    return "\n".join(out) + "\n", 0 if ok else 1


def _scan_rows(ns, cfg: RunConfig):
    masses = parse_grid(ns.m, "--m")
    if ns.quantity == "spectrum":
        tdir = parse_vector(ns.theta_dir, "--theta-dir")
        if not np.linalg.norm(tdir):
            raise UsageError("--theta-dir: direction must be nonzero")
        tdir = tdir / np.linalg.norm(tdir)
        thetas = parse_grid(ns.theta_mag, "--theta-mag")
        if ns.p is not None:
            pvecs = [parse_vector(ns.p, "--p")]
        else:
            d = parse_vector(ns.dir, "--dir")
            pvecs = [x * d / np.linalg.norm(d) for x in parse_grid(ns.pmag or "0", "--pmag")]
        header = ["m", "px", "py", "pz", "theta", "E2_1", "E2_2", "E2_3", "E2_4"]
        rows = [
            [m, *pv, t, *eq.noncommutative_spectrum(pv, m, t * tdir)]
            for m in masses for pv in pvecs for t in thetas
        ]
        return header, rows
    d = parse_vector(ns.dir, "--dir")
    if not np.linalg.norm(d):
        raise UsageError("--dir: direction must be nonzero")
    d = d / np.linalg.norm(d)
    pmags = parse_grid(ns.pmag or "0", "--pmag")
    if np.any(masses <= 0):
        raise UsageError("--m: masses must be positive for this scan")
    rows = []
    for m in masses:
        for x in pmags:
            p = _momentum(m, x * d)
            if ns.quantity == "residuals":
                scale = p.E + p.m
                dirac = max(dirac_residual(b(p, s, cfg.basis)) for b in (u_spinor, v_spinor) for s in (0.5, -0.5)) / scale
                sc = max(mj.selfconj_residual(s) for s in mj.all_spinors(p).values()) / math.sqrt(p.E)
                cp = max(eq.coupled_residual(p, cfg.frequency_convention)) / (scale * math.sqrt(p.E))
                rows.append([m, x, dirac, sc, cp, max(dirac, sc, cp)])
            else:
                rep = mj.biorthonormal_check(p, cfg.tolerance)
                tab = mj.biorthonormal_table(p)
                rows.append([m, x, rep.get("listed-pairings").residual, rep.get("unlisted-within-family").residual,
                             float(tab[0, 1].imag / m), float(tab[4, 5].imag / m)])
    if ns.quantity == "residuals":
        header = ["m", "pmag", "dirac", "selfconj", "coupled", "max_residual"]
    else:
        header = ["m", "pmag", "listed_dev", "unlisted_max", "lamS_up_down_over_im", "rhoS_up_down_over_im"]
    return header, rows


def cmd_scan(ns, cfg: RunConfig) -> tuple[str, int]:
    header, rows = _scan_rows(ns, cfg)
    if not rows:
        raise UsageError("grid is empty")
    if cfg.format == "json":
        return dump_json({"quantity": ns.quantity, "columns": header,
                          "rows": [[float(x) for x in r] for r in rows]}), 0
    if cfg.format == "csv":
        return dump_csv(header, rows), 0
    return dump_text_table(header, rows), 0


def cmd_spectrum(ns, cfg: RunConfig) -> tuple[str, int]:
    try:
        if ns.kind == "noncommutative":
            p3, theta = parse_vector(ns.p, "--p"), parse_vector(ns.theta, "--theta")
            if ns.m < 0:
                raise UsageError("--m: mass must be non-negative")
            values = [float(x) for x in eq.noncommutative_spectrum(p3, ns.m, theta)]
            label, formula = "E^2", "E² = p² + m² ± |θ|, eigenvalues of p² + m² + α·θ"
        elif ns.kind == "barut":
            if ns.alpha is None or ns.beta is None:
                raise UsageError("--alpha and --beta are required for the barut spectrum")
            values = eq.barut_masses(ns.alpha, ns.beta, ns.m)
            label, formula = "mass", "αμ²/m ± μ − β = 0"
        else:
            if ns.m1 is None:
                raise UsageError("--m1 is required for the gd1 spectrum")
            values = [eq.generalized_mass_shell(ns.m1, ns.m2)]
            label, formula = "mass", "p² = m₁² − m₂² from (γ·p − m₁ − m₂γ⁵)ψ = 0"
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(str(exc)) from None
    if cfg.format == "json":
        return dump_json({"kind": ns.kind, "quantity": label, "values": values, "formula": formula}), 0
    if cfg.format == "csv":
        return dump_csv(["index", label], list(enumerate(values))), 0
    return f"{label}: {', '.join(fmt_real(v) for v in values)}\nformula: {formula}\n", 0


COMMANDS = {"emit": cmd_emit, "verify": cmd_verify, "scan": cmd_scan, "spectrum": cmd_spectrum}


def main(argv=None) -> int:
    argv = _preprocess(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = make_config(ns, getattr(ns, "inject", None))
        text, code = COMMANDS[ns.command](ns, cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"spinor-forge: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
