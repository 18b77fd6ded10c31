"""Three-dimensional topological basis on four qubits and the reduced algebra.

The graphic states are

    g1 = 2 |psi_d>_12 |psi_d>_34
    g2 = 2 |psi_d>_14 |psi_d>_23
    g3 = 2 B_2 |psi_d>_12 |psi_d>_34

and the basis vectors e1, e2, e3 are fixed linear combinations of them.
Reduced matrices are M_ij = <e_i|O|e_j> for O acting on the four-qubit
chain.

Frames.  The reference reduced matrices of B_2 and E_2 correspond to the
basis (e1, -e2, e3): with e2 taken literally every entry adjacent to the
diagonal comes out with the opposite sign.  ``frame="reference"`` applies the
diagonal gauge diag(1, -1, 1) so results can be compared entry by entry
with the reference tables; ``frame="literal"`` (the default) does not.
The primed matrices additionally carry the U(1) gauge u(phi).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bmw import CONSTANTS, generators, psi_d
from .linalg import as_matrix, embed_two_site, frobenius_distance, permute_qubits, taylor_exp
from .report import DEFAULT_TOL, RelationReport, relation
from .ybe import r_matrix, velocity_add

__all__ = [
    "GraphicStates",
    "TopoBasis",
    "ReducedSet",
    "TopoSpinOps",
    "E2_SIGN",
    "graphic_states",
    "topo_basis",
    "reduce_operator",
    "u_gauge",
    "frame_gauge",
    "printed_matrices",
    "corrected_e_b_prime",
    "reduced_generators",
    "compare_printed",
    "verify_reduced_bmw",
    "topo_spin_ops",
    "script_A",
    "script_B",
    "script_B_closed_form",
    "check_reduced_ybe",
    "wigner_d1",
    "phase_diag",
    "reduced_hamiltonian",
    "reduced_nmr_form",
    "reduced_eigenvectors",
    "intertwining_reports",
]

SQRT2 = math.sqrt(2)
I3 = np.eye(3, dtype=np.complex128)
E2_SIGN = np.diag([1.0, -1.0, 1.0]).astype(np.complex128)
GRAM_TOL = 1e-10


def _ph(angle: float) -> complex:
    return cmath.exp(1j * angle)


@dataclass(frozen=True)
class GraphicStates:
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray
    phi: float


def graphic_states(phi: float) -> GraphicStates:
    pair = np.kron(psi_d(phi), psi_d(phi))
    b2 = embed_two_site(generators(phi).B, 2, 4)
    return GraphicStates(
        g1=2 * pair,
        g2=2 * permute_qubits(pair, (1, 4, 2, 3)),
        g3=2 * b2 @ pair,
        phi=phi,
    )


@dataclass(frozen=True)
class TopoBasis:
    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    phi: float
    gram_residual: float

    @property
    def vectors(self) -> np.ndarray:
        """3 x 16 array, one basis vector per row."""
        return np.array([self.e1, self.e2, self.e3])

    def gram(self) -> np.ndarray:
        v = self.vectors
        return v.conj() @ v.T

    @property
    def orthonormal(self) -> bool:
        return self.gram_residual < GRAM_TOL


def topo_basis(phi: float) -> TopoBasis:
    """Basis vectors exactly as combined from the graphic states.

    The Gram residual ||G - I||_F is stored rather than enforced; a
    non-orthonormal result is still returned so the discrepancy is visible.
    """
    g = graphic_states(phi)
    e1 = g.g1 / 2
    e2 = (g.g1 - g.g2 - _ph(5 * math.pi / 4) * g.g3) / 2
    e3 = (g.g1 + SQRT2 * _ph(3 * math.pi / 4) * g.g2 + SQRT2 * _ph(math.pi / 2) * g.g3) / 2
    v = np.array([e1, e2, e3])
    residual = frobenius_distance(v.conj() @ v.T, I3)
    return TopoBasis(e1, e2, e3, phi, residual)


def reduce_operator(op16, basis: TopoBasis) -> np.ndarray:
    """M_ij = <e_i|op|e_j>."""
    op = as_matrix(op16)
    if op.shape != (16, 16):
        raise ValueError(f"expected a 16x16 four-qubit operator, got {op.shape}")
    v = basis.vectors
    return v.conj() @ op @ v.T


def u_gauge(phi: float) -> np.ndarray:
    """diag(e^{i(pi/4 - phi)}, 1, e^{-i(pi/4 - phi)}).

    The unit middle entry is required for u to be unitary and to map the
    unprimed tables to the primed ones.
    """
    return np.diag([_ph(math.pi / 4 - phi), 1.0, _ph(-(math.pi / 4 - phi))])


def frame_gauge(frame: str) -> np.ndarray:
    if frame == "literal":
        return I3
    if frame == "reference":
        return E2_SIGN
    raise ValueError(f"frame must be 'literal' or 'reference', got {frame!r}")


def _conj(g: np.ndarray, m: np.ndarray) -> np.ndarray:
    return g @ m @ g.conj().T


def printed_matrices(phi: float) -> dict[str, np.ndarray]:
    """The reference 3x3 tables, transcribed verbatim (including the E_B' (2,3) entry)."""
    w = _ph(3 * math.pi / 4)
    a, b = _ph(-phi), _ph(phi)
    p4, m4 = _ph(math.pi / 4), _ph(-math.pi / 4)
    p2, m2 = _ph(math.pi / 2), _ph(-math.pi / 2)
    r = 1 / SQRT2
    return {
        "A": w * np.diag([1j, 1, -1j]),
        "E_A": np.diag([2, 0, 0]).astype(np.complex128),
        "E_B": np.array(
            [
                [0.5, r * 1j * m4, -0.5 * m2],
                [-r * 1j * p4, 1, r * 1j * m4],
                [-0.5 * p2, -r * 1j * p4, 0.5],
            ]
        ),
        "B": w
        * np.array(
            [
                [0.5, -r * m4, 0.5 * m2],
                [r * p4, 0, -r * m4],
                [0.5 * p2, r * p4, 0.5],
            ]
        ),
        "B'": w
        * np.array(
            [
                [0.5, -r * a, 0.5 * a * a],
                [r * b, 0, -r * a],
                [0.5 * b * b, r * b, 0.5],
            ]
        ),
        "E_B'": np.array(
            [
                [0.5, r * 1j * a, -0.5 * a * a],
                [-r * 1j * b, 1, r * 1j * b],
                [-0.5 * b * b, -r * 1j * b, 0.5],
            ]
        ),
    }


def corrected_e_b_prime(phi: float) -> np.ndarray:
    """The reference E_B' with entry (2,3) set to i e^{-i phi}/sqrt2, the Hermitian partner of (3,2)."""
    m = printed_matrices(phi)["E_B'"].copy()
    m[1, 2] = 1j * _ph(-phi) / SQRT2
    return m


@dataclass(frozen=True)
class ReducedSet:
    """Reduced B_1, B_2, E_1, E_2 and the u(phi)-gauged B_2', E_2'."""

    A: np.ndarray
    B: np.ndarray
    E_A: np.ndarray
    E_B: np.ndarray
    B_prime: np.ndarray
    E_B_prime: np.ndarray
    phi: float
    frame: str
    gram_residual: float

    def as_dict(self) -> dict[str, np.ndarray]:
        return {"A": self.A, "E_A": self.E_A, "E_B": self.E_B, "B": self.B, "B'": self.B_prime, "E_B'": self.E_B_prime}


def reduced_generators(phi: float, frame: str = "literal") -> ReducedSet:
    g = frame_gauge(frame)
    basis = topo_basis(phi)
    gens = generators(phi)

    def red(op, site):
        return _conj(g, reduce_operator(embed_two_site(op, site, 4), basis))

    a, b = red(gens.B, 1), red(gens.B, 2)
    e_a, e_b = red(gens.E, 1), red(gens.E, 2)
    u = u_gauge(phi)
    return ReducedSet(a, b, e_a, e_b, _conj(u, b), _conj(u, e_b), phi, frame, basis.gram_residual)


def entry_mismatches(computed, printed, tol: float) -> list[tuple[int, int]]:
    """1-based (row, col) of entries differing by at least ``tol``."""
    diff = np.abs(np.asarray(computed) - np.asarray(printed))
    return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(diff >= tol))]


def compare_printed(reduced: ReducedSet, tol: float = DEFAULT_TOL, corrected: bool = False) -> list[RelationReport]:
    """One report per table; failing names list the mismatching entries.

    ``corrected`` swaps in :func:`corrected_e_b_prime` for the reference E_B'.
    """
    printed = printed_matrices(reduced.phi)
    if corrected:
        printed["E_B'"] = corrected_e_b_prime(reduced.phi)
    reports = []
    for key, computed in reduced.as_dict().items():
        tag = f"{reduced.frame} frame" + (", corrected E_B'" if corrected else "")
        rep = relation(f"{key} vs printed [{tag}]", computed, printed[key], tol)
        if not rep.passed:
            bad = ",".join(f"({i},{j})" for i, j in entry_mismatches(computed, printed[key], tol))
            rep = RelationReport(f"{rep.name} mismatch at {bad}", rep.residual, rep.tolerance, rep.passed, rep.dims)
        reports.append(rep)
    return reports


def verify_reduced_bmw(a, b, e_a, e_b, tol: float = DEFAULT_TOL, label: str = "") -> list[RelationReport]:
    """B-M-W relations with two generator slots (1 -> A, E_A; 2 -> B, E_B)."""
    c = CONSTANTS
    gens = {1: (a, e_a), 2: (b, e_b)}
    inv = {k: v[0].conj().T for k, v in gens.items()}
    sfx = f" [{label}]" if label else ""
    reports = []
    for k, (bk, ek) in gens.items():
        tag = f"[slot {k}]{sfx}"
        reports += [
            relation(f"B B^dagger = I {tag}", bk @ inv[k], I3, tol),
            relation(f"B - B^-1 = w(I - E) {tag}", bk - inv[k], c.w * (I3 - ek), tol),
            relation(f"E B = sigma E {tag}", ek @ bk, c.sigma * ek, tol),
            relation(f"B E = sigma E {tag}", bk @ ek, c.sigma * ek, tol),
            relation(f"E^2 = d E {tag}", ek @ ek, c.d * ek, tol),
        ]
    for i, j in ((1, 2), (2, 1)):
        bi, ei = gens[i]
        bj, ej = gens[j]
        tag = f"[i={i},j={j}]{sfx}"
        reports += [
            relation(f"E_i E_j E_i = E_i {tag}", ei @ ej @ ei, ei, tol),
            relation(f"B_i B_j B_i = B_j B_i B_j {tag}", bi @ bj @ bi, bj @ bi @ bj, tol),
            relation(f"B_j B_i E_j = E_i E_j {tag}", bj @ bi @ ej, ei @ ej, tol),
            relation(f"E_i B_j B_i = E_i E_j {tag}", ei @ bj @ bi, ei @ ej, tol),
            relation(f"B_j E_i B_j = B_i^-1 E_j B_i^-1 {tag}", bj @ ei @ bj, inv[i] @ ej @ inv[i], tol),
        ]
    return reports


@dataclass(frozen=True)
class TopoSpinOps:
    S_plus: np.ndarray
    S_minus: np.ndarray
    S_3: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    phi: float

    def cartesian(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.S_plus + self.S_minus) / 2, (self.S_plus - self.S_minus) / 2j, self.S_3


def topo_spin_ops(phi: float) -> TopoSpinOps:
    """Spin-1 operators on span(e1, e2, e3), with e_k the k-th standard basis vector."""
    sp = -SQRT2 * np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=np.complex128)
    sm = sp.T.copy()
    s3 = np.diag([1, 0, -1]).astype(np.complex128)
    x = 0.5 * (_ph(-phi) * sp - _ph(phi) * sm)
    y = 2 * x @ x + I3
    return TopoSpinOps(sp, sm, s3, x, y, phi)


def script_A(theta: float) -> np.ndarray:
    """exp(i theta S_T^3) = diag(e^{i theta}, 1, e^{-i theta})."""
    return np.diag([_ph(theta), 1.0, _ph(-theta)])


def script_B(theta: float, phi: float) -> np.ndarray:
    """exp(theta X_T), explicit entries."""
    c = math.cos(theta / 2) ** 2
    s = math.sin(theta / 2) ** 2
    h = math.sin(theta) / SQRT2
    a, b = _ph(-phi), _ph(phi)
    return np.array(
        [
            [c, -h * a, s * a * a],
            [h * b, math.cos(theta), -h * a],
            [s * b * b, h * b, c],
        ],
        dtype=np.complex128,
    )


def script_B_closed_form(theta: float, phi: float) -> np.ndarray:
    ops = topo_spin_ops(phi)
    t = math.tan(theta / 2)
    return math.cos(theta / 2) ** 2 * (I3 + 2 * t * ops.X + t * t * ops.Y)


def script_B_exponential(theta: float, phi: float, terms: int = 30) -> np.ndarray:
    return taylor_exp(theta * topo_spin_ops(phi).X, terms)


def check_reduced_ybe(theta1: float, theta3: float, phi: float, tol: float = DEFAULT_TOL) -> RelationReport:
    theta2 = velocity_add(theta1, theta3)
    lhs = script_A(theta1) @ script_B(theta2, phi) @ script_A(theta3)
    rhs = script_B(theta3, phi) @ script_A(theta2) @ script_B(theta1, phi)
    return relation(f"reduced YBE theta1={theta1:.6g} theta3={theta3:.6g} phi={phi:.6g}", lhs, rhs, tol)


def wigner_d1(theta: float) -> np.ndarray:
    """Spin-1 small-d matrix, rows and columns ordered m = +1, 0, -1."""
    c = math.cos(theta / 2) ** 2
    s = math.sin(theta / 2) ** 2
    h = math.sin(theta) / SQRT2
    return np.array(
        [
            [c, -h, s],
            [h, math.cos(theta), -h],
            [s, h, c],
        ],
        dtype=np.complex128,
    )


def phase_diag(phi: float) -> np.ndarray:
    return np.diag([_ph(-phi), 1.0, _ph(phi)])


def _d_script_B_dphi(theta: float, phi: float) -> np.ndarray:
    s = math.sin(theta / 2) ** 2
    h = math.sin(theta) / SQRT2
    a, b = _ph(-phi), _ph(phi)
    return np.array(
        [
            [0, 1j * h * a, -2j * s * a * a],
            [1j * h * b, 0, 1j * h * a],
            [2j * s * b * b, 1j * h * b, 0],
        ],
        dtype=np.complex128,
    )


def reduced_hamiltonian(theta: float, phi: float, omega: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    """i hbar omega (d script_B / d phi) script_B^dagger."""
    return 1j * hbar * omega * _d_script_B_dphi(theta, phi) @ script_B(theta, phi).conj().T


def reduced_nmr_form(vartheta: float, phi: float, omega: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    s1, s2, s3 = topo_spin_ops(phi).cartesian()
    n = (math.sin(vartheta) * math.cos(phi), math.sin(vartheta) * math.sin(phi), math.cos(vartheta))
    return 2 * hbar * omega * math.cos(vartheta) * (n[0] * s1 + n[1] * s2 + n[2] * s3)


def reduced_eigenvectors(vartheta: float, phi: float) -> dict[int, np.ndarray]:
    """Eigenvectors of the reduced Hamiltonian with energy 2 m hbar omega cos(vartheta).

    They are the columns of diag(e^{-i phi}, 1, e^{i phi}) d1(-vartheta).
    """
    m = phase_diag(phi) @ wigner_d1(-vartheta)
    return {1: m[:, 0], 0: m[:, 1], -1: m[:, 2]}


def intertwining_reports(theta: float, phi: float, tol: float = DEFAULT_TOL, gauged: bool = True) -> list[RelationReport]:
    """Reduce R_1(theta, phi) and R_2(theta, phi) from the four-qubit chain.

    With ``gauged`` the reductions are conjugated by u(phi) diag(1, -1, 1),
    the frame in which the reference 3x3 solution lives; without it the
    raw <e_i|R|e_j> are compared.
    """
    basis = topo_basis(phi)
    g = u_gauge(phi) @ E2_SIGN if gauged else I3
    r = r_matrix(theta, phi)
    red1 = _conj(g, reduce_operator(embed_two_site(r, 1, 4), basis))
    red2 = _conj(g, reduce_operator(embed_two_site(r, 2, 4), basis))
    label = "gauged" if gauged else "literal"
    where = f"theta={theta:.6g} phi={phi:.6g} [{label}]"
    return [
        relation(f"<e|R_1|e> = A(theta) {where}", red1, script_A(theta), tol),
        relation(f"<e|R_2|e> = B(theta,phi) {where}", red2, script_B(theta, phi), tol),
    ]
