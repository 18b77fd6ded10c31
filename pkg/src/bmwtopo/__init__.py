"""Two-spin-1/2 B-M-W algebra, its Yang-Baxter solution and the 3D topological basis.

Submodules: ``linalg`` (qubit-chain utilities), ``bmw`` (generators and
relations), ``ybe`` (R(theta, phi), velocity addition, concurrence),
``spectral`` (Hamiltonian, eigensystem, Berry phase), ``topo``
(topological basis and reduced algebra) and ``cli``.
"""

from .bmw import CONSTANTS, generators, verify_bmw_relations, verify_braid_spectrum
from .report import RelationReport
from .spectral import berry_phase_analytic, berry_phase_numeric, eigensystem, hamiltonian, nmr_form
from .topo import reduced_generators, script_A, script_B, topo_basis, wigner_d1
from .ybe import check_ybe, concurrence, entangled_basis, r_matrix, velocity_add

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "RelationReport",
    "berry_phase_analytic",
    "berry_phase_numeric",
    "check_ybe",
    "concurrence",
    "eigensystem",
    "entangled_basis",
    "generators",
    "hamiltonian",
    "nmr_form",
    "r_matrix",
    "reduced_generators",
    "script_A",
    "script_B",
    "topo_basis",
    "velocity_add",
    "verify_bmw_relations",
    "verify_braid_spectrum",
    "wigner_d1",
]
