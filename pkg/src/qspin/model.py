"""Spin-3/2 in a quadrupole + transverse Zeeman field, as two coupled qubits.

Everything is dimensionless: energies are in units of the quadrupole
frequency ``ω_Q``, the applied field enters as ``alpha = ω0 / ω_Q`` and the
inverse temperature as ``beta = ω_Q / (k_B T)``.

Basis map between the spin-3/2 Zeeman states and the two fictitious
spins::

    |3/2> <-> |00>,  |1/2> <-> |01>,  |-1/2> <-> |10>,  |-3/2> <-> |11>

Two Hamiltonian modes are provided. ``"exact"`` is the trace projection of
the quadrupole + Zeeman Hamiltonian onto the Pauli basis; it carries a
transverse field ``√3·η`` on the first spin. ``"paper"`` uses ``(√3/2)·η``
instead, which is the form the closed-form energies, ground state and
concurrence below are consistent with. The two modes are related by
``H_paper(α, η) == H_exact(α, η/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import pauli
from .errors import DegenerateGround, ModeUnsupported
from .linalg import herm_eigensolve

MODES = ("paper", "exact")
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class ModelParams:
    alpha: float
    eta: float = 0.0
    beta: float = 0.0
    mode: str = "paper"
    omega_q_mhz: Optional[float] = None

    def __post_init__(self):
        for name in ("alpha", "eta", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")
        if self.beta < 0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class CouplingConstants:
    """Heisenberg couplings and selective fields, units of ``ω_Q``."""

    jx: float
    jy: float
    jz: float
    h01: float
    h02: float


@dataclass(frozen=True)
class GroundAmplitudes:
    """Ground state ``a₋|00> + b₊|01> + b₋|10> + a₊|11>`` and its normalization."""

    a_minus: float
    b_plus: float
    b_minus: float
    a_plus: float
    d: float

    def vector(self) -> np.ndarray:
        return np.array([self.a_minus, self.b_plus, self.b_minus, self.a_plus], dtype=complex)


@dataclass(frozen=True)
class ResonanceFrequencies:
    omega1: float
    omega2: float
    omega1_mhz: Optional[float] = None
    omega2_mhz: Optional[float] = None


@dataclass(frozen=True)
class ConsistencyReport:
    hq_eta_coeff_exact: float
    hq_eta_coeff_printed: float
    eq11_printed_energies: tuple
    numeric_energies: tuple
    max_energy_mismatch: float
    eq12_state_overlap: float
    eq15_concurrence_mismatch: float
    eq12_printed_overlap: float

    @property
    def eta_coeff_ratio(self) -> float:
        if self.hq_eta_coeff_printed == 0:
            return math.nan
        return self.hq_eta_coeff_exact / self.hq_eta_coeff_printed


def spin32_operators():
    """``(Ix, Iy, Iz)`` for spin 3/2 in the basis ``m = 3/2, 1/2, -1/2, -3/2``."""
    spin = 1.5
    ms = [1.5, 0.5, -0.5, -1.5]
    raise_op = np.zeros((4, 4), dtype=complex)
    for col, m in enumerate(ms[1:], start=1):
        # I+ |m> = sqrt(I(I+1) - m(m+1)) |m+1>, and |m+1> sits one row up
        raise_op[col - 1, col] = math.sqrt(spin * (spin + 1) - m * (m + 1))
    lower_op = raise_op.conj().T
    ix = 0.5 * (raise_op + lower_op)
    iy = -0.5j * (raise_op - lower_op)
    iz = np.diag(ms).astype(complex)
    return ix, iy, iz


def quadrupole_spin32(eta: float) -> np.ndarray:
    """``3Iz² - I² + η(Ix² - Iy²)`` in units of ``ω_Q``."""
    ix, iy, iz = spin32_operators()
    return 3 * iz @ iz - 3.75 * np.eye(4) + eta * (ix @ ix - iy @ iy)


def hamiltonian_spin32(p: ModelParams) -> np.ndarray:
    """Quadrupole plus Zeeman Hamiltonian built from spin-3/2 matrices.

    The Zeeman term is taken as ``+α·Ix``; flipping its sign is a local
    unitary on the second spin and changes no spectrum or concurrence.
    """
    ix, _, _ = spin32_operators()
    return quadrupole_spin32(p.eta) + p.alpha * ix


def couplings(p: ModelParams) -> CouplingConstants:
    h01 = SQRT3 * p.eta if p.mode == "exact" else 0.5 * SQRT3 * p.eta
    return CouplingConstants(
        jx=0.5 * p.alpha, jy=0.5 * p.alpha, jz=3.0, h01=h01, h02=0.5 * SQRT3 * p.alpha
    )


def hamiltonian_two_qubit(p: ModelParams) -> np.ndarray:
    """Heisenberg form ``Jx σxσx + Jy σyσy + Jz σzσz + h01 σxσ0 + h02 σ0σx``."""
    c = couplings(p)
    return pauli.reconstruct(
        {
            ("x", "x"): c.jx,
            ("y", "y"): c.jy,
            ("z", "z"): c.jz,
            ("x", "0"): c.h01,
            ("0", "x"): c.h02,
        }
    )


def _require_paper(p: ModelParams, what: str):
    if p.mode != "paper":
        raise ModeUnsupported(f"{what} is a closed form for paper mode; use the numerical path")


def _odd_radicand(alpha: float, eta: float) -> float:
    # 36 + 4α(3+α) - 6αη + 3η²
    return 4 * alpha**2 + 6 * alpha * (2 - eta) + 36 + 3 * eta**2


def _even_radicand(alpha: float, eta: float) -> float:
    return 4 * alpha**2 - 6 * alpha * (2 - eta) + 36 + 3 * eta**2


def analytic_energies(p: ModelParams) -> np.ndarray:
    """Closed-form spectrum of the paper-mode Hamiltonian, ascending.

    ``H`` commutes with ``σx⊗σx``; each parity sector is a 2x2 block whose
    eigenvalues are ``½(-α ∓ √odd)`` (odd sector, holds the ground state)
    and ``½(α ∓ √even)`` (even sector).
    """
    _require_paper(p, "analytic_energies")
    a, e = p.alpha, p.eta
    odd = math.sqrt(_odd_radicand(a, e))
    even = math.sqrt(_even_radicand(a, e))
    levels = [0.5 * (-a - odd), 0.5 * (-a + odd), 0.5 * (a - even), 0.5 * (a + even)]
    return np.sort(np.array(levels))


def printed_eq11_energies(p: ModelParams) -> np.ndarray:
    """Energy levels exactly as typeset in the source article.

    Kept only for the consistency report: these do not match the
    Hamiltonian's spectrum. Order is ``(E_{+3/2}, E_{-3/2}, E_{+1/2}, E_{-1/2})``.
    """
    w0, e = p.alpha, p.eta
    r32 = math.sqrt(4 * w0**2 - 6 * w0 * (2 - e) + (12 + e**2))
    r12 = math.sqrt(4 * w0**2 + 6 * w0 * (2 - e) + (12 + e**2))
    return np.array([0.5 * (-w0 - r32), 0.5 * (-w0 + r32), 0.5 * (w0 - r12), 0.5 * (w0 + r12)])


def _eq12_parts(p: ModelParams):
    if p.alpha == 0:
        raise DegenerateGround("ground state is degenerate at zero applied field")
    a, e = p.alpha, p.eta
    b_num = 6 + a + math.sqrt(_odd_radicand(a, e))
    a_num = SQRT3 * (a - e)
    d = math.sqrt(6 * (a - e) ** 2 + 2 * b_num**2)
    return a_num, b_num, d


def ground_amplitudes(p: ModelParams) -> GroundAmplitudes:
    """Closed-form ground state of the paper-mode Hamiltonian (``alpha > 0``).

    In the odd ``σx⊗σx`` sector the Hamiltonian is the 2x2 block
    ``[[3, √3(α-η)/2], [√3(α-η)/2, -3-α]]`` on ``(|00>-|11>)/√2`` and
    ``(|01>-|10>)/√2``, which gives ``a± = ±√3(α-η)/d`` and
    ``b± = ±(6 + α + √radicand)/d``. The typeset version has the opposite
    sign on ``a±`` (see :func:`printed_eq12_amplitudes`); the concurrence is
    the same for both.
    """
    _require_paper(p, "ground_amplitudes")
    a_num, b_num, d = _eq12_parts(p)
    return GroundAmplitudes(
        a_minus=-a_num / d, b_plus=b_num / d, b_minus=-b_num / d, a_plus=a_num / d, d=d
    )


def printed_eq12_amplitudes(p: ModelParams) -> GroundAmplitudes:
    """Ground-state amplitudes with the signs exactly as typeset in the source."""
    a_num, b_num, d = _eq12_parts(p)
    return GroundAmplitudes(
        a_minus=a_num / d, b_plus=b_num / d, b_minus=-b_num / d, a_plus=-a_num / d, d=d
    )


def resonance_frequencies(p: ModelParams) -> ResonanceFrequencies:
    """Selective resonance frequencies ``(√3·η, √3·α)`` of the two fictitious spins."""
    w1, w2 = SQRT3 * p.eta, SQRT3 * p.alpha
    if p.omega_q_mhz is None:
        return ResonanceFrequencies(w1, w2)
    return ResonanceFrequencies(w1, w2, w1 * p.omega_q_mhz, w2 * p.omega_q_mhz)


def consistency_report(p: ModelParams) -> ConsistencyReport:
    """Cross-check the printed closed forms against direct numerics.

    * η coefficient of ``σx⊗σ0``: trace projection of the spin-3/2
      quadrupole Hamiltonian vs the printed ``(√3/2)η``.
    * printed energy levels vs the eigensolver spectrum (paper mode).
    * closed-form ground state vs the numerical ground eigenvector, both
      sign-corrected and as typeset.
    * closed-form concurrence vs the concurrence of that eigenvector.
    """
    from .entanglement import closed_form_concurrence, vector_concurrence

    if p.alpha == 0:
        raise DegenerateGround("consistency report needs a non-degenerate ground state")
    paper = ModelParams(p.alpha, p.eta, p.beta, "paper", p.omega_q_mhz)

    exact_coeff = pauli.decompose(quadrupole_spin32(p.eta))[("x", "0")].real
    printed_coeff = 0.5 * SQRT3 * p.eta

    spec = herm_eigensolve(hamiltonian_two_qubit(paper))
    printed = printed_eq11_energies(paper)
    mismatch = float(np.max(np.abs(np.sort(printed) - spec.values)))

    psi = spec.vectors[:, 0]
    overlap = abs(np.vdot(psi, ground_amplitudes(paper).vector()))
    printed_overlap = abs(np.vdot(psi, printed_eq12_amplitudes(paper).vector()))
    c_mismatch = abs(closed_form_concurrence(paper) - vector_concurrence(psi))

    return ConsistencyReport(
        hq_eta_coeff_exact=float(exact_coeff),
        hq_eta_coeff_printed=printed_coeff,
        eq11_printed_energies=tuple(float(x) for x in printed),
        numeric_energies=tuple(float(x) for x in spec.values),
        max_energy_mismatch=mismatch,
        eq12_state_overlap=float(min(overlap, 1.0)),
        eq15_concurrence_mismatch=float(c_mismatch),
        eq12_printed_overlap=float(min(printed_overlap, 1.0)),
    )
