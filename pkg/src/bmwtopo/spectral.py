"""Yang-Baxter Hamiltonian, its instantaneous eigensystem and Berry phases.

With phi = omega t, H = i hbar omega (dR/dphi) R^dagger.  Writing
vartheta = (pi - theta)/2 it becomes 2 hbar omega cos(vartheta) n.S with
n the Bloch vector (sin vartheta cos phi, sin vartheta sin phi, cos vartheta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bmw import TranscriptionError, spin1_cartesian
from .report import DEFAULT_TOL
from .ybe import r_matrix

__all__ = [
    "SINGLET",
    "EigenSystem",
    "BerryResult",
    "dr_dphi",
    "dr_dphi_numeric",
    "hamiltonian",
    "nmr_form",
    "singlet_triplet_basis",
    "eigenstate",
    "eigensystem",
    "solid_angle",
    "berry_phase_analytic",
    "berry_phase_numeric",
]

SINGLET = "singlet"
SQRT2 = math.sqrt(2)


def dr_dphi(theta: float, phi: float) -> np.ndarray:
    """Entrywise phi-derivative of :func:`ybe.r_matrix`."""
    s = math.sin(theta / 2) ** 2
    h = 0.5 * math.sin(theta)
    a = np.exp(-1j * phi)
    b = np.exp(1j * phi)
    return np.array(
        [
            [0, 1j * h * a, 1j * h * a, 2j * s * a * a],
            [1j * h * b, 0, 0, -1j * h * a],
            [1j * h * b, 0, 0, -1j * h * a],
            [-2j * s * b * b, -1j * h * b, -1j * h * b, 0],
        ],
        dtype=np.complex128,
    )


def dr_dphi_numeric(theta: float, phi: float, step: float = 1e-6) -> np.ndarray:
    return (r_matrix(theta, phi + step) - r_matrix(theta, phi - step)) / (2 * step)


def hamiltonian(theta: float, phi: float, omega: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    return 1j * hbar * omega * dr_dphi(theta, phi) @ r_matrix(theta, phi).conj().T


def bloch_vector(vartheta: float, phi: float) -> tuple[float, float, float]:
    return (
        math.sin(vartheta) * math.cos(phi),
        math.sin(vartheta) * math.sin(phi),
        math.cos(vartheta),
    )


def nmr_form(vartheta: float, phi: float, omega: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    s1, s2, s3 = spin1_cartesian()
    nx, ny, nz = bloch_vector(vartheta, phi)
    return 2 * hbar * omega * math.cos(vartheta) * (nx * s1 + ny * s2 + nz * s3)


def singlet_triplet_basis() -> dict:
    """Keys (S, m): (1, 1), (1, 0), (1, -1), (0, 0)."""
    return {
        (1, 1): np.array([1, 0, 0, 0], dtype=np.complex128),
        (1, 0): np.array([0, 1, 1, 0], dtype=np.complex128) / SQRT2,
        (1, -1): np.array([0, 0, 0, 1], dtype=np.complex128),
        (0, 0): np.array([0, 1, -1, 0], dtype=np.complex128) / SQRT2,
    }


def _key(m_s) -> tuple[int, int]:
    if m_s == SINGLET or m_s == (0, 0):
        return (0, 0)
    if m_s in (-1, 0, 1):
        return (1, int(m_s))
    raise ValueError(f"m_s must be -1, 0, +1 or {SINGLET!r}, got {m_s!r}")


def eigenstate(vartheta: float, phi, m_s) -> np.ndarray:
    """Closed-form instantaneous eigenstate; ``phi`` may be an array (rows = phi values)."""
    key = _key(m_s)
    basis = singlet_triplet_basis()
    scalar = np.ndim(phi) == 0
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    a = np.exp(-1j * phi)[..., None]
    b = np.exp(1j * phi)[..., None]
    c2 = math.cos(vartheta / 2) ** 2
    s2 = math.sin(vartheta / 2) ** 2
    sn = math.sin(vartheta)
    up, zero, down = basis[(1, 1)], basis[(1, 0)], basis[(1, -1)]
    if key == (1, 1):
        v = c2 * a * a * up - sn / SQRT2 * a * zero - s2 * down
    elif key == (1, 0):
        v = (sn * a * up + SQRT2 * math.cos(vartheta) * zero + sn * b * down) / SQRT2
    elif key == (1, -1):
        v = s2 * up + sn / SQRT2 * b * zero - c2 * b * b * down
    else:
        v = basis[(0, 0)] * np.ones_like(a)
    return v[0] if scalar else v


def energy(vartheta: float, m_s, omega: float = 1.0, hbar: float = 1.0) -> float:
    key = _key(m_s)
    if key == (0, 0):
        return 0.0
    return 2 * key[1] * hbar * omega * math.cos(vartheta)


@dataclass(frozen=True)
class EigenSystem:
    energies: dict
    states: dict
    residuals: dict = field(default_factory=dict)

    def gram(self) -> np.ndarray:
        v = np.array(list(self.states.values()))
        return v.conj() @ v.T

    def completeness(self) -> np.ndarray:
        return sum(np.outer(v, v.conj()) for v in self.states.values())


def eigensystem(vartheta: float, phi: float, omega: float = 1.0, hbar: float = 1.0, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Eigenpairs of the NMR-form Hamiltonian, keyed by (S, m); residuals are verified."""
    h = nmr_form(vartheta, phi, omega, hbar)
    energies, states, residuals = {}, {}, {}
    for m_s in (1, 0, -1, SINGLET):
        key = _key(m_s)
        v = eigenstate(vartheta, phi, m_s)
        e = energy(vartheta, m_s, omega, hbar)
        energies[key] = e
        states[key] = v
        residuals[key] = float(np.linalg.norm(h @ v - e * v))
    bad = {k: r for k, r in residuals.items() if not r < tol * max(1.0, abs(hbar * omega))}
    if bad:
        raise TranscriptionError(f"eigen-residuals above tolerance: {bad}")
    return EigenSystem(energies, states, residuals)


def solid_angle(vartheta: float) -> float:
    return 2 * math.pi * (1 - math.cos(vartheta))


def berry_phase_analytic(vartheta: float, m_s) -> float:
    """-m_s * 2pi(1 - cos vartheta) on the triplet, 0 on the singlet."""
    key = _key(m_s)
    if key == (0, 0):
        return 0.0
    return -key[1] * solid_angle(vartheta)


@dataclass(frozen=True)
class BerryResult:
    m_s: object
    vartheta: float
    gamma_numeric: float
    gamma_analytic: float
    solid_angle: float
    steps: int
    gamma_accumulated: float

    @property
    def abs_error(self) -> float:
        return abs(self.gamma_numeric - self.gamma_analytic)


def _loop_overlaps(vartheta: float, m_s, steps: int) -> np.ndarray:
    phis = np.linspace(0.0, 2 * math.pi, steps + 1)
    v = eigenstate(vartheta, phis, m_s)
    # closed loop: the last grid point is phi = 2pi, where the states are single valued
    return np.einsum("ij,ij->i", v[:-1].conj(), v[1:])


def _loop_phase(vartheta: float, m_s, steps: int) -> tuple[float, float]:
    """(gauge-invariant phase wrapped to (-pi, pi], raw per-step sum in the closed-form gauge)."""
    ov = _loop_overlaps(vartheta, m_s, steps)
    step_phases = np.angle(ov)
    if np.max(np.abs(step_phases)) > math.pi / 2:
        raise ValueError(f"{steps} steps cannot resolve the phase winding")
    wrapped = -float(np.angle(np.prod(ov / np.abs(ov))))
    return wrapped, -float(np.sum(step_phases))


def berry_phase_numeric(vartheta: float, m_s, steps: int = 20000, max_dvartheta: float = 0.1) -> BerryResult:
    """Discrete (Pancharatnam) Berry phase gamma = -Im sum_k ln <psi_k|psi_k+1>.

    The closed-loop product is gauge invariant but only fixes gamma mod 2pi.
    The branch is chosen by continuation in vartheta from the pole
    vartheta = 0, where the loop degenerates to a point and gamma = 0;
    the phase is followed on a ladder with spacing at most
    ``max_dvartheta`` and unwrapped.
    """
    if steps < 100:
        raise ValueError("steps must be >= 100")
    if not 0 <= vartheta <= math.pi:
        raise ValueError("vartheta must lie in [0, pi]")
    rungs = max(1, math.ceil(vartheta / max_dvartheta))
    ladder = np.linspace(0.0, vartheta, rungs + 1)
    wrapped = np.array([_loop_phase(t, m_s, steps)[0] for t in ladder])
    gamma = float(np.unwrap(wrapped)[-1])
    _, accumulated = _loop_phase(vartheta, m_s, steps)
    return BerryResult(
        m_s=m_s,
        vartheta=vartheta,
        gamma_numeric=gamma,
        gamma_analytic=berry_phase_analytic(vartheta, m_s),
        solid_angle=solid_angle(vartheta),
        steps=steps,
        gamma_accumulated=accumulated,
    )
