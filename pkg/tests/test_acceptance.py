"""Acceptance criteria, one test per criterion (or sub-criterion).

Every test records a PASS/FAIL line, printed in the pytest terminal
summary under "acceptance criteria". Tolerances are fixed here.
"""

import math
from itertools import product

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_density, random_hermitian, random_unitary2
from qspin import pauli
from qspin.entanglement import (
    DensityMatrix,
    closed_form_concurrence,
    pure_concurrence,
    thermal_concurrence,
    wootters_concurrence,
)
from qspin.errors import NoTransition
from qspin.linalg import commutator, herm_eigensolve
from qspin.model import (
    ModelParams,
    analytic_energies,
    consistency_report,
    ground_amplitudes,
    hamiltonian_spin32,
    hamiltonian_two_qubit,
)
from qspin.scan import critical_beta

ETA = 0.14
GRID_ALPHA = np.linspace(5.0 / 30, 5.0, 30)
GRID_ETA = np.linspace(0.0, 1.0, 11)


def record(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


# 1. pure-state closed form limits

def test_c1_low_field_maximum():
    c = closed_form_concurrence(ModelParams(1e-6, 0.0))
    record("1a C(alpha=1e-6, eta=0) = 1", abs(c - 1) <= 1e-6, f"C={c:.12f}")


def test_c1_high_field_half():
    cs = [closed_form_concurrence(ModelParams(1e4, e)) for e in (0.0, 0.5, 1.0)]
    worst = max(abs(c - 0.5) for c in cs)
    record("1b C(alpha=1e4, eta in {0,.5,1}) = 0.5", worst <= 5e-4, f"max |C-0.5|={worst:.2e}")


def test_c1_zero_field_limit():
    c = closed_form_concurrence(ModelParams(1e-12, 1.0))
    target = (1 + 1 / 12) ** -0.5
    record("1c C(alpha->0+, eta=1) = (1+1/12)^-1/2", abs(c - target) <= 1e-9, f"|diff|={abs(c - target):.2e}")


# 2. internal consistency on a 30x11 grid

def test_c2_closed_form_vs_amplitudes_and_wootters():
    worst_amp = worst_w = 0.0
    for a, e in product(GRID_ALPHA, GRID_ETA):
        p = ModelParams(a, e)
        c = closed_form_concurrence(p)
        worst_amp = max(worst_amp, abs(c - pure_concurrence(ground_amplitudes(p))))
        psi = herm_eigensolve(hamiltonian_two_qubit(p)).vectors[:, 0]
        w = wootters_concurrence(DensityMatrix.from_vector(psi)).concurrence
        worst_w = max(worst_w, abs(c - w))
    record(
        "2 closed form vs amplitudes / Wootters(ground)",
        worst_amp <= 1e-9 and worst_w <= 1e-9,
        f"max diffs {worst_amp:.2e} / {worst_w:.2e}",
    )


# 3. spectrum oracle

def test_c3_analytic_energies_vs_jacobi():
    worst = worst_sum = 0.0
    for a, e in product(GRID_ALPHA, GRID_ETA):
        p = ModelParams(a, e)
        vals = herm_eigensolve(hamiltonian_two_qubit(p)).values
        worst = max(worst, float(np.max(np.abs(vals - analytic_energies(p)))))
        worst_sum = max(worst_sum, abs(float(np.sum(vals))))
    record(
        "3 analytic energies vs Jacobi, traceless",
        worst <= 1e-10 and worst_sum <= 1e-10,
        f"max |dE|={worst:.2e}, max |sum E|={worst_sum:.2e}",
    )


# 4. errata adjudication

def test_c4_consistency_report():
    rep = consistency_report(ModelParams(1.0, 0.5))
    ok = (
        rep.eq12_state_overlap >= 1 - 1e-9
        and rep.max_energy_mismatch > 0.5
        and abs(rep.eta_coeff_ratio - 2) <= 1e-12
    )
    record(
        "4 consistency report (alpha=1, eta=0.5)",
        ok,
        f"overlap={rep.eq12_state_overlap:.12f}, printed-E mismatch={rep.max_energy_mismatch:.4f}, "
        f"eta ratio={rep.eta_coeff_ratio:.12f}",
    )


# 5. thermal phase boundary

def test_c5_critical_beta_alpha1():
    bc = critical_beta(1.0, ETA)
    record("5a beta_c(alpha=1) = 0.24 +- 0.03", abs(bc - 0.24) <= 0.03, f"beta_c={bc:.6f}")


@pytest.mark.parametrize("alpha", [20.0, 50.0, 100.0])
def test_c5_high_field_asymptote(alpha):
    prod_ = alpha * critical_beta(alpha, ETA)
    record(
        f"5b alpha*beta_c in 0.85 +- 10% (alpha={alpha:g})",
        0.765 <= prod_ <= 0.935,
        f"alpha*beta_c={prod_:.4f}",
    )


def test_c5_no_transition_tiny_field():
    try:
        bc = critical_beta(1e-3, ETA)
    except NoTransition:
        record("5c no transition at alpha=1e-3", True, "NoTransition raised")
    else:
        record("5c no transition at alpha=1e-3", False, f"transition found at beta_c={bc:.4f}")


# 6. thermal saturation

def test_c6_saturation_and_hot_limit():
    c = thermal_concurrence(ModelParams(1e3, ETA, 4.0))
    hot = [thermal_concurrence(ModelParams(a, ETA, 0.0)) for a in (0.0, 0.5, 1.0, 10.0, 1e3)]
    record(
        "6 C_T(1e3, .14, 4) in [0.49, 0.51]; C_T(beta=0) == 0",
        0.49 <= c <= 0.51 and all(h == 0.0 for h in hot),
        f"C_T={c:.6f}, hot={hot}",
    )


# 7. shape properties

def test_c7_monotone_in_beta():
    worst = 0.0
    for alpha in (1.0, 2.0, 3.0, 4.0):
        bc = critical_beta(alpha, ETA)
        cs = np.array([thermal_concurrence(ModelParams(alpha, ETA, b)) for b in np.linspace(bc, 4, 50)])
        worst = min(worst, float(np.min(np.diff(cs))))
    record("7a C_T nondecreasing in beta above beta_c", worst >= 0, f"min step={worst:.2e}")


def test_c7_interior_maximum_grows():
    alphas = np.geomspace(0.1, 100, 60)
    peaks = []
    interior = True
    for beta in (2.0, 3.0, 4.0):
        cs = [thermal_concurrence(ModelParams(a, ETA, beta)) for a in alphas]
        k = int(np.argmax(cs))
        interior &= 0 < k < len(alphas) - 1
        peaks.append((round(float(alphas[k]), 3), round(cs[k], 4)))
    grows = peaks[0][1] < peaks[1][1] < peaks[2][1]
    record("7b interior maximum in alpha, growing with beta", interior and grows, f"(alpha*, C*)={peaks}")


# 8. property suites

def test_c8_properties(rng):
    gram = np.array([[np.trace(a @ b) for b in pauli.BASIS.values()] for a in pauli.BASIS.values()])
    ortho = np.array_equal(gram, 4 * np.eye(16))

    rt = max(
        float(np.max(np.abs(pauli.reconstruct(pauli.decompose(m)) - m)))
        for m in (random_hermitian(rng) + 1j * random_hermitian(rng) for _ in range(200))
    )

    exact = max(
        float(np.max(np.abs(
            hamiltonian_two_qubit(ModelParams(a, e, mode="exact")) - hamiltonian_spin32(ModelParams(a, e))
        )))
        for a, e in product(np.linspace(0, 5, 20), np.linspace(0, 1, 20))
    )

    pure = 0.0
    for _ in range(500):
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        pure = max(pure, abs(wootters_concurrence(DensityMatrix.from_vector(v)).concurrence - pure_concurrence(v)))

    lu = 0.0
    for _ in range(200):
        rho = random_density(rng, rng.integers(1, 5))
        u = np.kron(random_unitary2(rng), random_unitary2(rng))
        lu = max(lu, abs(
            wootters_concurrence(DensityMatrix(rho)).concurrence
            - wootters_concurrence(DensityMatrix(u @ rho @ u.conj().T)).concurrence
        ))

    xx = pauli.basis_element("xx")
    par = max(
        float(np.max(np.abs(commutator(hamiltonian_two_qubit(ModelParams(a, e, mode=m)), xx))))
        for a, e, m in product(GRID_ALPHA, GRID_ETA, ("paper", "exact"))
    )

    ok = ortho and rt <= 1e-12 and exact <= 1e-12 and pure <= 1e-9 and lu <= 1e-9 and par <= 1e-14
    record(
        "8 property suites",
        ok,
        f"orthonormal={ortho}, round trip={rt:.1e}, exact-mode={exact:.1e}, "
        f"pure Wootters={pure:.1e}, local unitary={lu:.1e}, [H,XX]={par:.1e}",
    )


# 9. weak eta dependence

def test_c9_weak_eta_dependence():
    cs = [thermal_concurrence(ModelParams(0.5, e, 2.0)) for e in np.linspace(0, 1, 101)]
    spread = max(cs) - min(cs)
    record("9 C_T(beta=2, alpha=0.5) varies < 0.1 over eta", spread < 0.1, f"spread={spread:.4f}")
