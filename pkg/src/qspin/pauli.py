"""Two-qubit Pauli product basis ``σ_i ⊗ σ_j`` with ``i, j ∈ {0, x, y, z}``.

Convention (used by every module): ``σ_z = diag(1, -1)``, ``σ_x`` real
off-diagonal, ``σ_y = [[0, -i], [i, 0]]``. The first label acts on the
first (most significant) qubit, so ``σ_z ⊗ σ_0 = diag(1, 1, -1, -1)``.

All 16 products are Hermitian, square to the identity and satisfy
``Tr(B_k B_l) = 4 δ_kl``, so any 4x4 operator ``m`` expands as
``m = Σ c_ij σ_i⊗σ_j`` with ``c_ij = Tr(m σ_i⊗σ_j) / 4``.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, NamedTuple

import numpy as np

from .linalg import as_matrix, kron2

LABELS = ("0", "x", "y", "z")

SIGMA = {
    "0": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
for _s in SIGMA.values():
    _s.setflags(write=False)


class PauliIndex(NamedTuple):
    first: str
    second: str

    def __str__(self) -> str:
        return f"{self.first}{self.second}"


INDICES = tuple(PauliIndex(a, b) for a, b in product(LABELS, LABELS))

# plain dict keyed by PauliIndex; tuples such as ("x", "x") also work as keys
PauliCoeffs = Dict[PauliIndex, complex]


def _build_basis() -> dict:
    out = {}
    for idx in INDICES:
        m = kron2(SIGMA[idx.first], SIGMA[idx.second])
        m.setflags(write=False)
        out[idx] = m
    return out


BASIS = _build_basis()


def parse_index(label) -> PauliIndex:
    """Accept ``PauliIndex``, a 2-tuple, or a string like ``"xz"`` / ``"0x"``."""
    if isinstance(label, str):
        label = label.lower().replace("i", "0")
        if len(label) != 2:
            raise ValueError(f"bad Pauli label {label!r}")
    first, second = label
    first, second = str(first), str(second)
    if first not in LABELS or second not in LABELS:
        raise ValueError(f"bad Pauli label {label!r}")
    return PauliIndex(first, second)


def basis_element(idx) -> np.ndarray:
    """Return ``σ_first ⊗ σ_second`` as a (read-only) 4x4 array."""
    return BASIS[parse_index(idx)]


def decompose(m) -> PauliCoeffs:
    """Expansion coefficients ``Tr(m B) / 4`` for all 16 basis elements."""
    a = as_matrix(m)
    if a.shape != (4, 4):
        raise ValueError("decompose expects a 4x4 matrix")
    # Tr(m B) = sum_ij m_ij B_ji
    return {idx: complex(np.sum(a * BASIS[idx].T)) / 4.0 for idx in INDICES}


def reconstruct(coeffs) -> np.ndarray:
    """Inverse of :func:`decompose`; missing indices count as zero."""
    out = np.zeros((4, 4), dtype=complex)
    for idx, c in coeffs.items():
        out += c * BASIS[parse_index(idx)]
    return out


def nonzero(coeffs, tol: float = 1e-12) -> PauliCoeffs:
    """Coefficients with magnitude above ``tol``, in canonical order."""
    return {idx: coeffs[idx] for idx in INDICES if idx in coeffs and abs(coeffs[idx]) > tol}


def is_real(coeffs, tol: float = 1e-12) -> bool:
    return all(abs(complex(c).imag) <= tol for c in coeffs.values())
