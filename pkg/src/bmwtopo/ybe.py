"""Yang-Baxterization R(theta, phi) = exp(theta X) and its entangled basis."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bmw import xy_ops
from .linalg import as_state, embed_two_site, taylor_exp
from .report import DEFAULT_TOL, RelationReport, relation

__all__ = [
    "VelocityPoleError",
    "EntangledBasis",
    "r_matrix",
    "r_closed_form",
    "r_from_exponential",
    "velocity_add",
    "check_ybe",
    "entangled_basis",
    "concurrence",
]

NORM_TOL = 1e-9


class VelocityPoleError(ValueError):
    """1 + tan(theta1/2) tan(theta3/2) = 0, so theta2 = pi is not a principal value."""


def r_matrix(theta: float, phi: float) -> np.ndarray:
    """Explicit 4x4 entries of R(theta, phi); total in theta."""
    c = math.cos(theta / 2) ** 2
    s = math.sin(theta / 2) ** 2
    h = 0.5 * math.sin(theta)
    a = np.exp(-1j * phi)
    b = np.exp(1j * phi)
    return np.array(
        [
            [c, -h * a, -h * a, -s * a * a],
            [h * b, c, -s, h * a],
            [h * b, -s, c, h * a],
            [-s * b * b, -h * b, -h * b, c],
        ],
        dtype=np.complex128,
    )


def r_closed_form(theta: float, phi: float) -> np.ndarray:
    """cos^2(theta/2) (I + 2 tan(theta/2) X + tan^2(theta/2) Y); singular at theta = pi."""
    x, y = xy_ops(phi)
    t = math.tan(theta / 2)
    return math.cos(theta / 2) ** 2 * (np.eye(4) + 2 * t * x + t * t * y)


def r_from_exponential(theta: float, phi: float, terms: int = 30) -> np.ndarray:
    x, _ = xy_ops(phi)
    return taylor_exp(theta * x, terms)


def velocity_add(theta1: float, theta3: float) -> float:
    """theta2 with tan(theta2/2) = (t1 + t3) / (1 + t1 t3), t = tan(theta/2).

    Evaluated as sin((theta1+theta3)/2) / cos((theta1-theta3)/2), which is the
    same ratio without the tan poles at theta = +-pi.  Returns the principal
    value in (-pi, pi).
    """
    num = math.sin((theta1 + theta3) / 2)
    den = math.cos((theta1 - theta3) / 2)
    if abs(den) < 1e-15:
        raise VelocityPoleError(f"velocity pole at theta1={theta1!r}, theta3={theta3!r}")
    return 2 * math.atan(num / den)


def check_ybe(theta1: float, theta3: float, phi: float, tol: float = DEFAULT_TOL) -> RelationReport:
    """R_1(t1) R_2(t2) R_1(t3) = R_2(t3) R_1(t2) R_2(t1) on three qubits."""
    theta2 = velocity_add(theta1, theta3)

    def r(i, theta):
        return embed_two_site(r_matrix(theta, phi), i, 3)

    lhs = r(1, theta1) @ r(2, theta2) @ r(1, theta3)
    rhs = r(2, theta3) @ r(1, theta2) @ r(2, theta1)
    name = f"YBE theta1={theta1:.6g} theta3={theta3:.6g} phi={phi:.6g}"
    return relation(name, lhs, rhs, tol)


@dataclass(frozen=True)
class EntangledBasis:
    """Images R|uu>, R|ud>, R|du>, R|dd> (in that order)."""

    states: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    theta: float
    phi: float

    def gram(self) -> np.ndarray:
        v = np.array(self.states)
        return v.conj() @ v.T


def entangled_basis(theta: float, phi: float) -> EntangledBasis:
    r = r_matrix(theta, phi)
    return EntangledBasis(tuple(r[:, k].copy() for k in range(4)), theta, phi)


def concurrence(state) -> float:
    """C = 2|ad - bc| for a normalized two-qubit pure state a|uu> + b|ud> + c|du> + d|dd>."""
    s = as_state(state)
    if s.shape != (4,):
        raise ValueError(f"concurrence needs a two-qubit state, got length {s.shape[0]}")
    norm = float(np.linalg.norm(s))
    if abs(norm - 1) > NORM_TOL:
        raise ValueError(f"state is not normalized (norm {norm!r})")
    a, b, c, d = s
    return float(2 * abs(a * d - b * c))
