"""Self-check suite run by ``qspin check``.

Each check returns ``(passed, detail)``. They cover the structural
invariants of the model; the pytest suite covers the same ground in more
depth.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from . import pauli
from .entanglement import (
    DensityMatrix,
    closed_form_concurrence,
    pure_concurrence,
    thermal_concurrence,
    vector_concurrence,
    wootters_concurrence,
)
from .linalg import commutator, herm_eigensolve
from .model import (
    ModelParams,
    analytic_energies,
    hamiltonian_spin32,
    hamiltonian_two_qubit,
)
from .scan import critical_beta

ALPHAS = np.linspace(5.0 / 30, 5.0, 30)
ETAS = np.linspace(0.0, 1.0, 11)


def _random_hermitian(rng, n=4):
    a = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
    return 0.5 * (a + a.conj().T)


def _random_unitary(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def check_eigensolver(rng):
    worst = 0.0
    for _ in range(200):
        m = _random_hermitian(rng)
        worst = max(worst, float(np.max(np.abs(herm_eigensolve(m).reconstruct() - m))))
    return worst <= 1e-9, f"max reconstruction error {worst:.2e}"


def check_pauli_orthonormal(rng):
    gram = np.array(
        [[np.trace(a @ b) for b in pauli.BASIS.values()] for a in pauli.BASIS.values()]
    )
    ok = np.array_equal(gram, 4 * np.eye(16))
    return ok, "Tr(B_k B_l) == 4 delta_kl" if ok else "Gram matrix mismatch"


def check_round_trip(rng):
    worst = 0.0
    for _ in range(100):
        m = _random_hermitian(rng) + 1j * _random_hermitian(rng)
        worst = max(worst, float(np.max(np.abs(pauli.reconstruct(pauli.decompose(m)) - m))))
    return worst <= 1e-12, f"max round-trip error {worst:.2e}"


def check_exact_mode(rng):
    worst = 0.0
    for a, e in product(np.linspace(0, 5, 20), np.linspace(0, 1, 20)):
        diff = hamiltonian_two_qubit(ModelParams(a, e, mode="exact")) - hamiltonian_spin32(
            ModelParams(a, e)
        )
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst <= 1e-12, f"max |H_exact - H_spin32| {worst:.2e}"


def check_parity(rng):
    xx = pauli.basis_element("xx")
    worst = 0.0
    for a, e, mode in product(ALPHAS, ETAS, ("paper", "exact")):
        h = hamiltonian_two_qubit(ModelParams(a, e, mode=mode))
        worst = max(worst, float(np.max(np.abs(commutator(h, xx)))))
    return worst <= 1e-14, f"max |[H, XX]| {worst:.2e}"


def check_energies(rng):
    worst = 0.0
    for a, e in product(ALPHAS, ETAS):
        p = ModelParams(a, e)
        num = herm_eigensolve(hamiltonian_two_qubit(p)).values
        worst = max(worst, float(np.max(np.abs(num - analytic_energies(p)))))
    return worst <= 1e-10, f"max analytic-numeric energy gap {worst:.2e}"


def check_ground_concurrence(rng):
    worst = 0.0
    for a, e in product(ALPHAS, ETAS):
        p = ModelParams(a, e)
        psi = herm_eigensolve(hamiltonian_two_qubit(p)).vectors[:, 0]
        c = wootters_concurrence(DensityMatrix.from_vector(psi)).concurrence
        worst = max(worst, abs(c - closed_form_concurrence(p)))
    return worst <= 1e-9, f"max |closed form - Wootters(ground)| {worst:.2e}"


def check_wootters_pure(rng):
    worst = 0.0
    for _ in range(500):
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        c = wootters_concurrence(DensityMatrix.from_vector(v)).concurrence
        worst = max(worst, abs(c - pure_concurrence(v)))
    return worst <= 1e-9, f"max |Wootters - 2|ad-bc|| {worst:.2e}"


def check_local_unitary(rng):
    worst = 0.0
    for _ in range(100):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = a @ a.conj().T
        rho /= np.trace(rho).real
        u = np.kron(_random_unitary(rng), _random_unitary(rng))
        c0 = wootters_concurrence(DensityMatrix(rho)).concurrence
        c1 = wootters_concurrence(DensityMatrix(u @ rho @ u.conj().T)).concurrence
        worst = max(worst, abs(c0 - c1))
    return worst <= 1e-9, f"max local-unitary change {worst:.2e}"


def check_thermal_limits(rng):
    hot = thermal_concurrence(ModelParams(1.0, 0.14, 0.0))
    cold = thermal_concurrence(ModelParams(1.0, 0.14, 50.0))
    pure = closed_form_concurrence(ModelParams(1.0, 0.14))
    ok = hot == 0.0 and abs(cold - pure) <= 1e-6
    return ok, f"C_T(beta=0)={hot}, |C_T(beta=50) - C|={abs(cold - pure):.2e}"


def check_boundary(rng):
    bc = critical_beta(1.0, 0.14)
    below = thermal_concurrence(ModelParams(1.0, 0.14, 0.99 * bc))
    above = thermal_concurrence(ModelParams(1.0, 0.14, 1.01 * bc))
    return below <= 1e-9 < above, f"beta_c(alpha=1)={bc:.6f}"


CHECKS = [
    ("eigensolver reconstruction", check_eigensolver),
    ("pauli orthonormality", check_pauli_orthonormal),
    ("decompose/reconstruct round trip", check_round_trip),
    ("exact mode equals spin-3/2 Hamiltonian", check_exact_mode),
    ("parity conservation", check_parity),
    ("analytic energies", check_energies),
    ("closed-form vs Wootters ground concurrence", check_ground_concurrence),
    ("Wootters on pure states", check_wootters_pure),
    ("local-unitary invariance", check_local_unitary),
    ("thermal limits", check_thermal_limits),
    ("phase boundary bracketing", check_boundary),
]


def run_checks(seed: int = 0):
    """Yield ``(name, passed, detail)`` for every check."""
    rng = np.random.default_rng(seed)
    for name, func in CHECKS:
        try:
            ok, detail = func(rng)
        except Exception as exc:  # report, don't abort the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, bool(ok), detail
