"""Command-line front end: verification suites and CSV sweeps.

Exit status is 0 when every relation passes, 1 when any fails and 2 on
usage errors.  Random parameters come from ``numpy.random.default_rng(seed)``:
theta uniform in (-pi + 0.1, pi - 0.1), phi uniform in [0, 2pi).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import bmw, spectral, topo, ybe
from .linalg import frobenius_distance, inner
from .report import BERRY_TOL, DEFAULT_TOL, RelationReport, relation, scalar_report

COMMANDS = ("verify-algebra", "verify-ybe", "entangle", "berry", "topo", "all")
THETA_MARGIN = 0.1


@dataclass
class SuiteReport:
    suite: str
    config: dict
    reports: list[RelationReport] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def n_failed(self) -> int:
        return len(self.reports) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "reports": [r.as_dict() for r in self.reports],
            "summary": {"passed": self.n_passed, "failed": self.n_failed},
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        lines += [str(r) for r in self.reports]
        lines.append(f"passed {self.n_passed}, failed {self.n_failed} ({self.elapsed_ms:.1f} ms)")
        return "\n".join(lines)


def random_thetas(rng: np.random.Generator, size) -> np.ndarray:
    return rng.uniform(-math.pi + THETA_MARGIN, math.pi - THETA_MARGIN, size)


def random_phis(rng: np.random.Generator, size) -> np.ndarray:
    return rng.uniform(0.0, 2 * math.pi, size)


def _phis(cfg: argparse.Namespace, rng: np.random.Generator) -> list[float]:
    if cfg.random:
        return [float(p) for p in random_phis(rng, cfg.random)]
    return [cfg.phi]


def _prefix(prefix: str, reports: list[RelationReport]) -> list[RelationReport]:
    return [RelationReport(f"{prefix}{r.name}", r.residual, r.tolerance, r.passed, r.dims) for r in reports]


def algebra_reports(cfg, rng) -> list[RelationReport]:
    c = bmw.CONSTANTS
    out = [
        scalar_report("constants: d = 2", abs(c.d - 2), 1e-15),
        scalar_report("constants: w = sqrt(2) i", abs(c.w - math.sqrt(2) * 1j), 1e-15),
        scalar_report("constants: d = 1 - (sigma - 1/sigma)/w", abs(c.d - (1 - (c.sigma - 1 / c.sigma) / c.w)), 1e-15),
    ]
    for k, phi in enumerate(_phis(cfg, rng)):
        tag = f"algebra[{k:03d} phi={phi:.6g}] "
        out += _prefix(tag, bmw.verify_bmw_relations(cfg.n, phi, cfg.tol))
        out += _prefix(tag, bmw.verify_braid_spectrum(phi, cfg.tol))
    return out


def ybe_reports(cfg, rng) -> list[RelationReport]:
    out = []
    if cfg.theta1 is not None and cfg.theta3 is not None:
        triples = [(cfg.theta1, cfg.theta3, cfg.phi)]
    else:
        th = random_thetas(rng, (cfg.random or 100, 2))
        ph = random_phis(rng, cfg.random or 100)
        triples = [(float(a), float(b), float(p)) for (a, b), p in zip(th, ph)]
    for k, (t1, t3, phi) in enumerate(triples):
        out += _prefix(f"ybe[{k:03d}] ", [ybe.check_ybe(t1, t3, phi, cfg.tol)])
    phi = triples[0][2]
    b = bmw.generators(phi).B
    out += [
        relation(f"R(0, phi) = I [phi={phi:.6g}]", ybe.r_matrix(0.0, phi), np.eye(4), cfg.tol),
        relation(
            f"R(pi/2, phi) = e^(-i3pi/4) B [phi={phi:.6g}]",
            ybe.r_matrix(math.pi / 2, phi),
            np.exp(-3j * math.pi / 4) * b,
            cfg.tol,
        ),
    ]
    return out


def entangle_rows(cfg, rng) -> tuple[list[RelationReport], list[dict]]:
    thetas = np.linspace(0.0, math.pi, cfg.points)
    phis = _phis(cfg, rng)
    rows, out = [], []
    for phi in phis:
        worst = 0.0
        for theta in thetas:
            expected = math.sin(theta) ** 2
            measured = [ybe.concurrence(s) for s in ybe.entangled_basis(float(theta), phi).states]
            c = max(measured, key=lambda v: abs(v - expected))
            err = abs(c - expected)
            worst = max(worst, err)
            rows.append({"theta": float(theta), "phi": phi, "C_measured": c, "C_expected": expected, "abs_error": err})
        out.append(scalar_report(f"entangle: max |C - sin^2 theta| [phi={phi:.6g}]", worst, cfg.tol, 4))
    return out, rows


def berry_rows(cfg, rng) -> tuple[list[RelationReport], list[dict]]:
    varthetas = cfg.vartheta if cfg.vartheta else [float(v) for v in np.linspace(0.1, 3.0, 10)]
    rows, out = [], []
    for vt in varthetas:
        for m_s in (1, 0, -1, spectral.SINGLET):
            res = spectral.berry_phase_numeric(vt, m_s, cfg.berry_steps)
            rows.append(
                {
                    "vartheta": vt,
                    "m_s": m_s,
                    "gamma_numeric": res.gamma_numeric,
                    "gamma_analytic": res.gamma_analytic,
                    "abs_error": res.abs_error,
                    "solid_angle": res.solid_angle,
                }
            )
            out.append(scalar_report(f"berry[vartheta={vt:.6g} m_s={m_s}]", res.abs_error, cfg.berry_tol, 4))
    return out, rows


def topo_reports(cfg, rng) -> list[RelationReport]:
    phi = cfg.phi
    tol = cfg.tol
    out = []
    basis = topo.topo_basis(phi)
    g = topo.graphic_states(phi)
    out += [
        scalar_report("topo: Gram(e1,e2,e3) = I", basis.gram_residual, topo.GRAM_TOL, 3),
        scalar_report("topo: <g1|g1> = d^2", abs(inner(g.g1, g.g1) - 4), tol, 16),
        scalar_report("topo: <g1|g2> = d", abs(inner(g.g1, g.g2) - 2), tol, 16),
        scalar_report("topo: <g3|g3> = d^2", abs(inner(g.g3, g.g3) - 4), tol, 16),
    ]
    lit = topo.reduced_generators(phi, "literal")
    ref = topo.reduced_generators(phi, "reference")
    out += topo.compare_printed(ref, tol, corrected=True)
    out += topo.verify_reduced_bmw(lit.A, lit.B, lit.E_A, lit.E_B, tol, "literal")
    out += topo.verify_reduced_bmw(ref.A, ref.B_prime, ref.E_A, ref.E_B_prime, tol, "reference primed")
    if cfg.literal:
        out += topo.compare_printed(lit, tol)
        out += topo.compare_printed(ref, tol)

    ops = topo.topo_spin_ops(phi)
    printed = topo.printed_matrices(phi)
    out += [
        relation("S_T: [S+, S-] = 2 S3", ops.S_plus @ ops.S_minus - ops.S_minus @ ops.S_plus, 2 * ops.S_3, tol),
        relation("S_T: [S3, S+] = S+", ops.S_3 @ ops.S_plus - ops.S_plus @ ops.S_3, ops.S_plus, tol),
        relation("S_T: (I - 2i X_T - Y_T)/2 = E_B' (corrected)", 0.5 * (topo.I3 - 2j * ops.X - ops.Y), topo.corrected_e_b_prime(phi), tol),
        relation(
            "S_T: e^(i3pi/4)(I + 2X_T + Y_T)/2 = B'",
            0.5 * np.exp(3j * math.pi / 4) * (topo.I3 + 2 * ops.X + ops.Y),
            printed["B'"],
            tol,
        ),
        relation("B(pi/2, phi) = e^(-i3pi/4) B'", topo.script_B(math.pi / 2, phi), np.exp(-3j * math.pi / 4) * printed["B'"], tol),
    ]

    th = random_thetas(rng, (cfg.random or 100, 2))
    for k, (t1, t3) in enumerate(th):
        out += _prefix(f"topo[{k:03d}] ", [topo.check_reduced_ybe(float(t1), float(t3), phi, tol)])
    for theta in np.linspace(-math.pi, math.pi, 19):
        theta = float(theta)
        p = topo.phase_diag(phi)
        out.append(
            relation(
                f"wigner: B(theta,phi) = P d1 P^dagger [theta={theta:.6g}]",
                topo.script_B(theta, phi),
                p @ topo.wigner_d1(theta) @ p.conj().T,
                tol,
            )
        )
        out += topo.intertwining_reports(theta, phi, tol, gauged=True)
        if cfg.literal:
            out += topo.intertwining_reports(theta, phi, tol, gauged=False)
    vt = 0.4
    h = topo.reduced_hamiltonian(math.pi - 2 * vt, phi)
    out.append(relation("H_T = NMR form [vartheta=0.4]", h, topo.reduced_nmr_form(vt, phi), tol))
    for m, v in topo.reduced_eigenvectors(vt, phi).items():
        out.append(scalar_report(f"H_T eigenvector m={m} [vartheta=0.4]", frobenius_distance(h @ v, 2 * m * math.cos(vt) * v), tol, 3))
    return out


def spectral_reports(cfg, rng) -> list[RelationReport]:
    out = []
    th = random_thetas(rng, cfg.random or 20)
    ph = random_phis(rng, cfg.random or 20)
    for k, (theta, phi) in enumerate(zip(th, ph)):
        theta, phi = float(theta), float(phi)
        vt = (math.pi - theta) / 2
        h = spectral.hamiltonian(theta, phi)
        tag = f"spectral[{k:03d}] "
        out.append(relation(f"{tag}H Hermitian", h, h.conj().T, cfg.tol))
        out.append(relation(f"{tag}H = NMR form", h, spectral.nmr_form(vt, phi), cfg.tol))
        es = spectral.eigensystem(vt, phi, tol=1.0)
        for key, r in es.residuals.items():
            out.append(scalar_report(f"{tag}eigen-residual {key}", r, cfg.tol, 4))
    return out


def run_suite(cfg: argparse.Namespace) -> tuple[SuiteReport, list[dict]]:
    """Run one suite; returns the report and CSV rows (empty unless entangle/berry)."""
    rng = np.random.default_rng(cfg.seed)
    start = time.perf_counter()
    rows: list[dict] = []
    reports: list[RelationReport] = []
    cmd = cfg.command
    if cmd in ("verify-algebra", "all"):
        reports += algebra_reports(cfg, rng)
    if cmd in ("verify-ybe", "all"):
        reports += ybe_reports(cfg, rng)
    if cmd in ("entangle", "all"):
        r, rows_ = entangle_rows(cfg, rng)
        reports += r
        rows += rows_ if cmd == "entangle" else []
    if cmd == "all":
        reports += spectral_reports(cfg, rng)
    if cmd in ("berry", "all"):
        r, rows_ = berry_rows(cfg, rng)
        reports += r
        rows += rows_ if cmd == "berry" else []
    if cmd in ("topo", "all"):
        reports += topo_reports(cfg, rng)
    reports.sort(key=lambda r: r.name)
    elapsed = (time.perf_counter() - start) * 1000
    return SuiteReport(cmd, config_echo(cfg), reports, elapsed), rows


def config_echo(cfg: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(cfg).items()) if k not in ("func",)}


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (format(v, ".17g") if isinstance(v, float) else v) for k, v in row.items()})
    return buf.getvalue()


def _positive(value: str) -> float:
    v = float(value)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _steps(value: str) -> int:
    v = int(value)
    if v < 100:
        raise argparse.ArgumentTypeError("must be >= 100")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmwtopo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--phi", type=float, default=0.3, help="phase parameter phi (radians)")
    common.add_argument("--random", type=int, default=0, metavar="N", help="number of seeded random draws")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="report path (CSV path for entangle/berry)")

    p = sub.add_parser("verify-algebra", parents=[common], help="B-M-W relations, constants and braid spectrum")
    p.add_argument("--n", type=int, default=3, help="chain length (>= 3)")

    p = sub.add_parser("verify-ybe", parents=[common], help="Yang-Baxter equation with the velocity-addition rule")
    p.add_argument("--theta1", type=float)
    p.add_argument("--theta3", type=float)

    p = sub.add_parser("entangle", parents=[common], help="concurrence sweep of the entangled basis")
    p.add_argument("--points", type=int, default=181, help="theta grid points on [0, pi]")

    p = sub.add_parser("berry", parents=[common], help="numerical vs analytic Berry phases")
    p.add_argument("--vartheta", type=float, nargs="*", help="vartheta values (default: 10 points on [0.1, 3.0])")
    p.add_argument("--berry-steps", type=_steps, default=20000)
    p.add_argument("--berry-tol", type=_positive, default=BERRY_TOL)

    p = sub.add_parser("topo", parents=[common], help="topological basis, reduced algebra, reduced YBE, Wigner D1")
    p.add_argument("--literal", action="store_true", help="also compare in the unmodified basis (known to fail)")

    p = sub.add_parser("all", parents=[common], help="every suite")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--points", type=int, default=181)
    p.add_argument("--berry-steps", type=_steps, default=20000)
    p.add_argument("--berry-tol", type=_positive, default=BERRY_TOL)
    p.add_argument("--literal", action="store_true")
    return parser


_DEFAULTS = {
    "n": 3,
    "theta1": None,
    "theta3": None,
    "points": 181,
    "vartheta": None,
    "berry_steps": 20000,
    "berry_tol": BERRY_TOL,
    "literal": False,
}


def parse_config(argv=None) -> argparse.Namespace:
    parser = build_parser()
    cfg = parser.parse_args(argv)
    for k, v in _DEFAULTS.items():
        if not hasattr(cfg, k):
            setattr(cfg, k, v)
    if cfg.n < 3:
        parser.error("--n must be >= 3")
    if cfg.random < 0:
        parser.error("--random must be >= 0")
    if (cfg.theta1 is None) != (cfg.theta3 is None):
        parser.error("--theta1 and --theta3 must be given together")
    if cfg.points < 2:
        parser.error("--points must be >= 2")
    if cfg.vartheta and any(not 0 <= v <= math.pi for v in cfg.vartheta):
        parser.error("--vartheta values must lie in [0, pi]")
    return cfg


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        report, rows = run_suite(cfg)
    except ValueError as exc:
        print(f"bmwtopo: error: {exc}", file=sys.stderr)
        return 2

    text = report.to_json() if cfg.format == "json" else report.to_text()
    try:
        if rows and cfg.out:
            with open(cfg.out, "w", newline="") as fh:
                fh.write(rows_to_csv(rows))
            print(text)
        elif cfg.out and not rows:
            with open(cfg.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    except OSError as exc:
        print(f"bmwtopo: cannot write {cfg.out}: {exc}", file=sys.stderr)
        return 2
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
