"""Small dense Hermitian linear algebra.

Matrices are plain ``numpy`` complex arrays (4x4 for every physical object
in this package, 2x2 for single Pauli factors). The eigensolver is a cyclic
complex Jacobi method: for matrices this small it is simple, needs no
LAPACK call, and returns orthonormal eigenvectors by construction.
Spectral matrix functions (exponential, PSD square root) are built on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NegativeEigenvalue, NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-12
PSD_CLAMP = 1e-12
MAX_SWEEPS = 100
_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order, eigenvectors as matching columns."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T

    def apply(self, func) -> np.ndarray:
        """Return ``V f(Λ) V†`` for an elementwise function ``func``."""
        return (self.vectors * func(self.values)) @ self.vectors.conj().T


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate Hermiticity and return the exactly symmetrized matrix.

    The tolerance is absolute for matrices of order-one entries and scales
    with the largest entry otherwise.
    """
    a = as_matrix(m)
    scale = max(1.0, float(np.max(np.abs(a))))
    dev = float(np.max(np.abs(a - a.conj().T)))
    if dev > tol * scale:
        raise NotHermitian(f"matrix deviates from Hermitian by {dev:.3e}")
    return 0.5 * (a + a.conj().T)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _rotation(a: np.ndarray, p: int, q: int) -> np.ndarray | None:
    """Unitary G with (G† a G)[p, q] == 0, or None if already zero."""
    apq = a[p, q]
    mag = abs(apq)
    if mag < _TINY:
        return None
    phase = np.exp(1j * np.angle(apq))
    tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    if abs(tau) > 1e150:
        t = 0.5 / tau
    else:
        t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    g = np.eye(a.shape[0], dtype=complex)
    # phase on column q makes the (p, q) element real, then a real rotation
    g[p, p] = c
    g[p, q] = s
    g[q, p] = -s * np.conj(phase)
    g[q, q] = c * np.conj(phase)
    return g


def herm_eigensolve(m, tol: float = 1e-12) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    m : array_like
        Hermitian matrix (checked entrywise against ``m†``).
    tol : float
        Convergence threshold on the off-diagonal Frobenius norm, relative
        to ``max(1, ||m||_F)``.

    Returns
    -------
    Spectrum
        Ascending eigenvalues and orthonormal eigenvector columns. Vectors
        inside a degenerate eigenspace are an arbitrary orthonormal basis.

    Raises
    ------
    NotHermitian
    NoConvergence
        If the off-diagonal norm is still above threshold after
        ``MAX_SWEEPS`` sweeps.
    """
    a = check_hermitian(m)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    for _ in range(MAX_SWEEPS):
        if _off_norm(a) < threshold:
            break
        for p, q in pairs:
            g = _rotation(a, p, q)
            if g is None:
                # subnormal leftovers would poison the phase computation
                a[p, q] = a[q, p] = 0.0
                continue
            a = g.conj().T @ a @ g
            a[p, q] = a[q, p] = 0.0
            v = v @ g
    else:
        if _off_norm(a) >= threshold:
            raise NoConvergence(
                f"off-diagonal norm {_off_norm(a):.3e} after {MAX_SWEEPS} sweeps"
            )

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    return Spectrum(values=values[order], vectors=v[:, order])


def singular_values(m, tol: float = 1e-15) -> np.ndarray:
    """Singular values, descending, by one-sided (Hestenes) Jacobi.

    Columns are rotated pairwise until mutually orthogonal; the singular
    values are then the column norms. Unlike eigenvalues of ``m† m`` this
    never squares the matrix, so small singular values keep an absolute
    accuracy of order machine epsilon times ``||m||``.
    """
    u = as_matrix(m).copy()
    n = u.shape[1]
    # columns below this squared norm carry only round-off
    floor = (np.finfo(float).eps * np.linalg.norm(u)) ** 2
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p, q in pairs:
            cols = u[:, [p, q]]
            gram = cols.conj().T @ cols
            if min(gram[0, 0].real, gram[1, 1].real) <= floor:
                continue
            if abs(gram[0, 1]) <= tol * np.sqrt(gram[0, 0].real * gram[1, 1].real):
                continue
            g = _rotation(gram, 0, 1)
            if g is None:
                continue
            u[:, [p, q]] = cols @ g
            rotated = True
        if not rotated:
            break
    else:
        raise NoConvergence(f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps")
    return np.sort(np.linalg.norm(u, axis=0))[::-1]


def mat_exp_hermitian(m) -> np.ndarray:
    """Matrix exponential of a Hermitian matrix through its spectrum."""
    return herm_eigensolve(m).apply(np.exp)


def mat_sqrt_psd(m) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-12, 0)`` are treated as round-off and clamped to
    zero; anything more negative raises ``NegativeEigenvalue``.
    """
    spec = herm_eigensolve(m)
    if spec.values[0] < -PSD_CLAMP:
        raise NegativeEigenvalue(f"eigenvalue {spec.values[0]:.3e} < 0")
    return spec.apply(lambda w: np.sqrt(np.clip(w, 0.0, None)))


def kron2(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices: ``out[2i+k, 2j+l] = a[i,j] b[k,l]``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron2 expects two 2x2 matrices")
    return np.kron(a, b)


def dagger(m) -> np.ndarray:
    return np.asarray(m).conj().T


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a
