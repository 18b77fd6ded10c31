"""Small dense complex linear algebra on qubit chains.

Matrices and state vectors are plain ``numpy`` ``complex128`` arrays.
Qubit 1 is the most significant bit of an amplitude index, i.e. the
leftmost tensor factor: ``|b1 b2 ... bn>`` sits at index
``b1 * 2**(n-1) + ... + bn`` with ``0 = up`` and ``1 = down``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

__all__ = [
    "as_matrix",
    "as_state",
    "kron",
    "matmul",
    "dagger",
    "frobenius_distance",
    "commutator",
    "n_qubits",
    "embed_two_site",
    "permute_qubits",
    "taylor_exp",
    "basis_state",
    "inner",
]


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def as_state(v) -> np.ndarray:
    s = np.asarray(v, dtype=np.complex128)
    if s.ndim != 1:
        raise ValueError(f"expected a 1-D state vector, got shape {s.shape}")
    if not np.all(np.isfinite(s)):
        raise ValueError("state has non-finite amplitudes")
    return s


def n_qubits(v) -> int:
    """Number of qubits of a state or square operator whose dimension is 2**n."""
    dim = np.shape(v)[0]
    n = dim.bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def frobenius_distance(a, b) -> float:
    """sqrt(sum |a_ij - b_ij|^2); the residual metric used by every check."""
    a, b = np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def commutator(a, b) -> np.ndarray:
    return matmul(a, b) - matmul(b, a)


def inner(u, v) -> complex:
    """<u|v>, conjugating the left argument."""
    return complex(np.vdot(as_state(u), as_state(v)))


def basis_state(bits: str | Sequence[int]) -> np.ndarray:
    """Computational basis state from a bit string such as ``"01"`` or ``"ud"``."""
    if isinstance(bits, str):
        table = {"0": 0, "1": 1, "u": 0, "d": 1}
        try:
            bits = [table[c] for c in bits]
        except KeyError as exc:
            raise ValueError(f"bad bit label {exc.args[0]!r}") from None
    index = 0
    for b in bits:
        index = 2 * index + int(b)
    v = np.zeros(1 << len(bits), dtype=np.complex128)
    v[index] = 1.0
    return v


def embed_two_site(op, site: int, chain: int) -> np.ndarray:
    """Place a 4x4 operator on qubits (site, site+1) of an n-qubit chain.

    ``site`` is 1-based, as in ``E_i = I x ... x E x ... x I``.
    """
    op = as_matrix(op)
    if op.shape != (4, 4):
        raise ValueError(f"two-site operator must be 4x4, got {op.shape}")
    if not 1 <= site <= chain - 1:
        raise ValueError(f"site {site} out of range for a {chain}-qubit chain")
    left = np.eye(1 << (site - 1), dtype=np.complex128)
    right = np.eye(1 << (chain - site - 1), dtype=np.complex128)
    return np.kron(np.kron(left, op), right)


def permute_qubits(state, perm: Sequence[int]) -> np.ndarray:
    """Move the qubit at (1-based) position k to position ``perm[k-1]``.

    With ``perm = (1, 4, 2, 3)`` a product ``|a>_{12}|b>_{34}`` becomes
    ``|a>_{14}|b>_{23}``.
    """
    s = as_state(state)
    n = n_qubits(s)
    perm = [int(p) for p in perm]
    if len(perm) != n:
        raise ValueError(f"permutation of length {len(perm)} for a {n}-qubit state")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    if n == 0:
        return s.copy()
    t = s.reshape((2,) * n)
    return np.moveaxis(t, list(range(n)), [p - 1 for p in perm]).reshape(-1)


def taylor_exp(m, terms: int = 30) -> np.ndarray:
    """Truncated series sum_{k<terms} m^k / k!.

    When ||m||_F > 1 the argument is halved s times until it is at most 1,
    and the result is squared s times, so 30 terms reach double precision
    for the bounded generators used here.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"taylor_exp needs a square matrix, got {m.shape}")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    norm = float(np.linalg.norm(m))
    squarings = max(0, math.ceil(math.log2(norm))) if norm > 1.0 else 0
    a = m / (1 << squarings)

    eye = np.eye(m.shape[0], dtype=np.complex128)
    result = eye.copy()
    term = eye
    for k in range(1, terms):
        term = term @ a / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result
