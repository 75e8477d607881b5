"""Concurrence of the two fictitious spins: pure ground state and thermal state."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateGround, InvalidState, ModeUnsupported, NotNormalized
from .linalg import as_matrix, herm_eigensolve, singular_values
from .model import GroundAmplitudes, ModelParams, hamiltonian_two_qubit
from .pauli import basis_element

NORM_TOL = 1e-9
STATE_TOL = 1e-12
PSD_TOL = 1e-10

SPIN_FLIP = basis_element("yy")


@dataclass(frozen=True)
class DensityMatrix:
    """Two-qubit density matrix; Hermiticity and unit trace are checked on construction.

    ``log_partition`` is ``ln Z`` when the state came from :func:`thermal_state`.
    """

    rho: np.ndarray
    log_partition: Optional[float] = None

    def __post_init__(self):
        try:
            rho = as_matrix(self.rho)
        except ValueError as exc:
            raise InvalidState(str(exc)) from None
        if rho.shape != (4, 4):
            raise InvalidState(f"density matrix must be 4x4, got {rho.shape}")
        dev = float(np.max(np.abs(rho - rho.conj().T)))
        if dev > STATE_TOL:
            raise InvalidState(f"density matrix not Hermitian (deviation {dev:.2e})")
        tr = np.trace(rho).real
        if abs(tr - 1.0) > STATE_TOL:
            raise InvalidState(f"density matrix trace is {tr!r}, expected 1")
        object.__setattr__(self, "rho", 0.5 * (rho + rho.conj().T))

    @classmethod
    def from_vector(cls, psi) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex).reshape(4)
        norm = np.linalg.norm(psi)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"state vector norm is {norm!r}")
        psi = psi / norm
        return cls(np.outer(psi, psi.conj()))

    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))


@dataclass(frozen=True)
class WoottersResult:
    concurrence: float
    lambdas: tuple


def vector_concurrence(psi) -> float:
    """``2|ψ00 ψ11 - ψ01 ψ10|`` for a normalized two-qubit state vector."""
    psi = np.asarray(psi, dtype=complex).reshape(4)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state vector norm is {norm!r}")
    return min(1.0, 2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2]))


def pure_concurrence(g) -> float:
    """Concurrence ``2|a₊a₋ - b₊b₋|`` of a pure state given by its amplitudes.

    ``g`` is a :class:`GroundAmplitudes` or any 4-sequence ordered as
    ``(a₋, b₊, b₋, a₊)``, i.e. the coefficients of ``|00>, |01>, |10>, |11>``.
    """
    if isinstance(g, GroundAmplitudes):
        amps = (g.a_minus, g.b_plus, g.b_minus, g.a_plus)
    else:
        amps = tuple(g)
    a_minus, b_plus, b_minus, a_plus = amps
    norm2 = sum(abs(x) ** 2 for x in amps)
    if abs(norm2 - 1.0) > NORM_TOL:
        raise NotNormalized(f"squared norm of amplitudes is {norm2!r}")
    return min(1.0, 2.0 * abs(a_plus * a_minus - b_plus * b_minus))


def closed_form_concurrence(p: ModelParams) -> float:
    """Ground-state concurrence ``(6+α) / √(36 + 4α(3+α) - 6αη + 3η²)``.

    Raises ``DegenerateGround`` at ``alpha == 0``: the formula's limit there
    is not the physical value (a degenerate pure-NQR ground manifold holds
    no entanglement); the exception's ``concurrence`` attribute is 0.
    """
    if p.alpha == 0:
        raise DegenerateGround("closed form is invalid at zero applied field (degenerate ground state)")
    if p.mode != "paper":
        raise ModeUnsupported("closed-form concurrence describes the paper-mode Hamiltonian")
    a, e = p.alpha, p.eta
    return (6 + a) / math.sqrt(36 + 4 * a * (3 + a) - 6 * a * e + 3 * e**2)


def thermal_state(p: ModelParams) -> DensityMatrix:
    """Gibbs state ``exp(-βH) / Z`` of the two-qubit Hamiltonian in ``p.mode``.

    Energies are shifted by the ground level before exponentiating, so large
    ``β·H`` neither overflows nor loses the ground-state weight.
    """
    spec = herm_eigensolve(hamiltonian_two_qubit(p))
    shifted = spec.values - spec.values[0]
    weights = np.exp(-p.beta * shifted)
    total = float(np.sum(weights))
    rho = (spec.vectors * (weights / total)) @ spec.vectors.conj().T
    log_z = -p.beta * float(spec.values[0]) + math.log(total)
    return DensityMatrix(rho, log_partition=log_z)


def spin_flip(rho) -> np.ndarray:
    """``(σy⊗σy) ρ* (σy⊗σy)`` with ρ* the entrywise conjugate."""
    return SPIN_FLIP @ np.conj(rho) @ SPIN_FLIP


def wootters_concurrence(d: DensityMatrix, method: str = "singular") -> WoottersResult:
    """Mixed-state concurrence ``max(0, λ1 - λ2 - λ3 - λ4)``.

    The λ's are square roots of the eigenvalues of ``ρ ρ̃``, ``ρ̃`` being the
    spin-flipped state. Two equivalent routes avoid a non-Hermitian
    eigenproblem:

    ``"singular"`` (default)
        Write ``ρ = W W†`` with ``W = V √P`` from the spectrum of ``ρ``; the
        λ's are the singular values of ``Wᵀ (σy⊗σy) W``. Nothing is squared,
        so vanishing λ's stay at round-off level.
    ``"hermitian"``
        Eigenvalues of ``√ρ ρ̃ √ρ``, then square roots. Zero λ's come out near
        ``√eps ≈ 1e-8``; kept as an independent cross-check.
    """
    if not isinstance(d, DensityMatrix):
        d = DensityMatrix(d)
    rho_spec = herm_eigensolve(d.rho)
    if rho_spec.values[0] < -PSD_TOL:
        raise InvalidState(f"density matrix has eigenvalue {rho_spec.values[0]:.3e}")
    roots = np.sqrt(np.clip(rho_spec.values, 0.0, None))

    if method == "singular":
        w = rho_spec.vectors * roots
        lambdas = singular_values(w.T @ SPIN_FLIP @ w)
    elif method == "hermitian":
        sqrt_rho = (rho_spec.vectors * roots) @ rho_spec.vectors.conj().T
        m = sqrt_rho @ spin_flip(d.rho) @ sqrt_rho
        mu = herm_eigensolve(0.5 * (m + m.conj().T)).values
        lambdas = np.sqrt(np.clip(mu, 0.0, None))[::-1]
    else:
        raise ValueError(f"unknown method {method!r}")

    c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    c = min(max(0.0, float(c)), 1.0)
    return WoottersResult(concurrence=c, lambdas=tuple(float(x) for x in lambdas))


def thermal_concurrence(p: ModelParams) -> float:
    """Shortcut: Wootters concurrence of the Gibbs state at ``p``."""
    return wootters_concurrence(thermal_state(p)).concurrence
