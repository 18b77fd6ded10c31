"""Two-spin-1/2 realization of the Birman-Murakami-Wenzl algebra.

The generators act on a pair of neighbouring qubits.  ``E`` is the
Temperley-Lieb element (``E^2 = 2E``) and ``B`` the braid element with
eigenvalues ``e^{i5pi/4}``, ``e^{i3pi/4}`` (twice) and ``e^{ipi/4}``.
Both are built twice, from their explicit entries and from the spin-1
operators ``X`` and ``Y``; :func:`generators` refuses to return a set
where the two routes disagree.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .linalg import commutator, dagger, embed_two_site, kron
from .report import DEFAULT_TOL, RelationReport, relation, scalar_report

__all__ = [
    "AlgebraConstants",
    "CONSTANTS",
    "GeneratorSet",
    "TranscriptionError",
    "spin_half_ops",
    "spin1_pair_ops",
    "xy_ops",
    "psi_d",
    "e_matrix",
    "b_matrix",
    "generators",
    "verify_bmw_relations",
    "verify_braid_spectrum",
]

I2 = np.eye(2, dtype=np.complex128)
I4 = np.eye(4, dtype=np.complex128)


class TranscriptionError(RuntimeError):
    """Two independent constructions of the same object disagree."""


@dataclass(frozen=True)
class AlgebraConstants:
    sigma: complex
    w: complex
    d: complex
    braid_eigenvalues: tuple[complex, complex, complex]

    @classmethod
    def from_eigenvalues(cls, lam1: complex, lam2: complex, lam3: complex) -> "AlgebraConstants":
        sigma = lam1
        w = lam2 + lam3
        d = 1 - (sigma - 1 / sigma) / w
        return cls(sigma, w, d, (lam1, lam2, lam3))


CONSTANTS = AlgebraConstants.from_eigenvalues(
    cmath.exp(5j * math.pi / 4),
    cmath.exp(3j * math.pi / 4),
    cmath.exp(1j * math.pi / 4),
)
if abs(CONSTANTS.d - 2) > 1e-14 or abs(CONSTANTS.w - math.sqrt(2) * 1j) > 1e-14:
    raise TranscriptionError(f"unexpected topological parameters {CONSTANTS}")

PHASE = cmath.exp(3j * math.pi / 4)


def spin_half_ops() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(s+, s-, s3) in the (up, down) basis."""
    sp = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    sm = sp.conj().T.copy()
    s3 = np.diag([0.5, -0.5]).astype(np.complex128)
    return sp, sm, s3


def spin1_pair_ops() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spin-1 operators carried by two spins 1/2.

    S+- = -2 (s+-_i s3_j + s3_i s+-_j),  S3 = s3_i + s3_j.
    """
    sp, sm, s3 = spin_half_ops()
    big_sp = -2 * (kron(sp, s3) + kron(s3, sp))
    big_sm = -2 * (kron(sm, s3) + kron(s3, sm))
    big_s3 = kron(s3, I2) + kron(I2, s3)
    return big_sp, big_sm, big_s3


def spin1_cartesian() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(S1, S2, S3) with S+- = S1 +- i S2."""
    sp, sm, s3 = spin1_pair_ops()
    return (sp + sm) / 2, (sp - sm) / 2j, s3


def xy_ops(phi: float) -> tuple[np.ndarray, np.ndarray]:
    """X = (e^{-i phi} S+ - e^{i phi} S-)/2 (anti-Hermitian) and Y = 2X^2 + I."""
    sp, sm, _ = spin1_pair_ops()
    x = 0.5 * (cmath.exp(-1j * phi) * sp - cmath.exp(1j * phi) * sm)
    y = 2 * x @ x + I4
    return x, y


def psi_d(phi: float) -> np.ndarray:
    """(e^{-i phi}|uu> - i|ud> - i|du> + e^{i phi}|dd>) / 2."""
    return 0.5 * np.array([cmath.exp(-1j * phi), -1j, -1j, cmath.exp(1j * phi)])


def e_matrix(phi: float) -> np.ndarray:
    """Temperley-Lieb matrix E(phi), entry by entry."""
    a = cmath.exp(-1j * phi)
    b = cmath.exp(1j * phi)
    return 0.5 * np.array(
        [
            [1, 1j * a, 1j * a, a * a],
            [-1j * b, 1, 1, -1j * a],
            [-1j * b, 1, 1, -1j * a],
            [b * b, 1j * b, 1j * b, 1],
        ],
        dtype=np.complex128,
    )


def b_matrix(phi: float) -> np.ndarray:
    """Braid matrix B(phi), entry by entry."""
    a = cmath.exp(-1j * phi)
    b = cmath.exp(1j * phi)
    return (PHASE / 2) * np.array(
        [
            [1, -a, -a, -a * a],
            [b, 1, -1, a],
            [b, -1, 1, a],
            [-b * b, -b, -b, 1],
        ],
        dtype=np.complex128,
    )


@dataclass(frozen=True)
class GeneratorSet:
    phi: float
    E: np.ndarray
    B: np.ndarray
    B_inv: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    psi_d: np.ndarray


def generators(phi: float, tol: float = DEFAULT_TOL) -> GeneratorSet:
    """Build E, B, B^-1, X, Y and |psi_d> at ``phi``.

    E and B come from the explicit entries and are cross-checked against
    E = (I - 2iX - Y)/2 and B = e^{i3pi/4}(I + 2X + Y)/2.  B^-1 is taken
    as B^dagger once unitarity is confirmed.
    """
    if not math.isfinite(phi):
        raise ValueError("phi must be finite")
    x, y = xy_ops(phi)
    e = e_matrix(phi)
    b = b_matrix(phi)
    checks = [
        relation("E explicit vs X/Y form", e, 0.5 * (I4 - 2j * x - y), tol),
        relation("B explicit vs X/Y form", b, 0.5 * PHASE * (I4 + 2 * x + y), tol),
        relation("B unitary", dagger(b) @ b, I4, tol),
    ]
    bad = [str(c) for c in checks if not c.passed]
    if bad:
        raise TranscriptionError("; ".join(bad))
    return GeneratorSet(phi, e, b, dagger(b), x, y, psi_d(phi))


def _neighbour_pairs(n: int):
    for i in range(1, n):
        for j in (i - 1, i + 1):
            if 1 <= j <= n - 1:
                yield i, j


def verify_bmw_relations(n: int = 3, phi: float = 0.0, tol: float = DEFAULT_TOL) -> list[RelationReport]:
    """Check every defining B-M-W relation on an n-qubit chain.

    Single-site relations are reported for each i; the neighbour relations
    for every ordered pair (i, j = i +- 1) that fits on the chain.  For
    n >= 4 commutation of generators on disjoint pairs is checked too.
    """
    if n < 3:
        raise ValueError("neighbour relations need a chain of at least 3 qubits")
    g = generators(phi, tol)
    c = CONSTANTS
    dim = 1 << n
    eye = np.eye(dim, dtype=np.complex128)
    E = {i: embed_two_site(g.E, i, n) for i in range(1, n)}
    B = {i: embed_two_site(g.B, i, n) for i in range(1, n)}
    Bi = {i: embed_two_site(g.B_inv, i, n) for i in range(1, n)}

    reports = []
    for i in range(1, n):
        tag = f"[i={i}]"
        reports += [
            relation(f"B_i B_i^-1 = I {tag}", B[i] @ Bi[i], eye, tol),
            relation(f"B_i - B_i^-1 = w(I - E_i) {tag}", B[i] - Bi[i], c.w * (eye - E[i]), tol),
            relation(f"E_i B_i = sigma E_i {tag}", E[i] @ B[i], c.sigma * E[i], tol),
            relation(f"B_i E_i = sigma E_i {tag}", B[i] @ E[i], c.sigma * E[i], tol),
            relation(f"E_i^2 = d E_i {tag}", E[i] @ E[i], c.d * E[i], tol),
        ]
    for i, j in _neighbour_pairs(n):
        tag = f"[i={i},j={j}]"
        reports += [
            relation(f"E_i E_j E_i = E_i {tag}", E[i] @ E[j] @ E[i], E[i], tol),
            relation(f"B_i B_j B_i = B_j B_i B_j {tag}", B[i] @ B[j] @ B[i], B[j] @ B[i] @ B[j], tol),
            relation(f"B_j B_i E_j = E_i E_j {tag}", B[j] @ B[i] @ E[j], E[i] @ E[j], tol),
            relation(f"E_i B_j B_i = E_i E_j {tag}", E[i] @ B[j] @ B[i], E[i] @ E[j], tol),
            relation(f"B_j E_i B_j = B_i^-1 E_j B_i^-1 {tag}", B[j] @ E[i] @ B[j], Bi[i] @ E[j] @ Bi[i], tol),
        ]
    for i, j in product(range(1, n), repeat=2):
        if j >= i + 2:
            tag = f"[i={i},j={j}]"
            reports += [
                relation(f"[B_i, B_j] = 0 {tag}", commutator(B[i], B[j]), 0 * eye, tol),
                relation(f"[E_i, B_j] = 0 {tag}", commutator(E[i], B[j]), 0 * eye, tol),
                relation(f"[E_i, E_j] = 0 {tag}", commutator(E[i], E[j]), 0 * eye, tol),
            ]
    return reports


def verify_braid_spectrum(phi: float = 0.0, tol: float = DEFAULT_TOL) -> list[RelationReport]:
    """Minimal polynomial, trace and degeneracy of the braid matrix.

    Returns three reports: ||(B - l1)(B - l2)(B - l3)||, |tr B - (l1 + 2 l2 + l3)|
    and |rank(B - l2 I) - 2|.
    """
    b = generators(phi, tol).B
    l1, l2, l3 = CONSTANTS.braid_eigenvalues
    minpoly = (b - l1 * I4) @ (b - l2 * I4) @ (b - l3 * I4)
    rank = int(np.linalg.matrix_rank(b - l2 * I4, tol=1e-9))
    return [
        relation("(B - l1)(B - l2)(B - l3) = 0", minpoly, np.zeros((4, 4)), tol),
        scalar_report("tr B = l1 + 2 l2 + l3", abs(np.trace(b) - (l1 + 2 * l2 + l3)), tol, 4),
        scalar_report("rank(B - l2 I) = 2", abs(rank - 2), tol, 4),
    ]
