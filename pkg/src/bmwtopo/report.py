from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .linalg import frobenius_distance

DEFAULT_TOL = 1e-12
BERRY_TOL = 1e-6


@dataclass(frozen=True)
class RelationReport:
    """Outcome of one numerical identity check: passed iff residual < tolerance."""

    name: str
    residual: float
    tolerance: float
    passed: bool
    dims: int

    def as_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: residual={self.residual:.3e} (tol {self.tolerance:.0e}, dim {self.dims})"


def relation(name: str, lhs, rhs, tol: float = DEFAULT_TOL) -> RelationReport:
    """Compare two operators (or vectors, or scalars) by Frobenius distance."""
    lhs = np.asarray(lhs, dtype=np.complex128)
    residual = frobenius_distance(lhs, rhs)
    dims = lhs.shape[0] if lhs.ndim else 1
    return RelationReport(name, residual, tol, bool(residual < tol), int(dims))


def scalar_report(name: str, residual: float, tol: float, dims: int = 1) -> RelationReport:
    residual = float(residual)
    return RelationReport(name, residual, tol, bool(residual < tol), dims)
