"""Spin-3/2 quadrupole nucleus as two coupled fictitious spins 1/2.

Builds the quadrupole + Zeeman Hamiltonian in the two-qubit Pauli basis and
computes ground-state and thermal (Wootters) concurrence, the thermal
entanglement boundary, and figure-ready parameter sweeps.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BracketFailure,
    DegenerateGround,
    DomainError,
    InvalidState,
    ModeUnsupported,
    NoConvergence,
    NoTransition,
    NotHermitian,
    NotNormalized,
    NumericalError,
    QSpinError,
)
from .model import ModelParams  # noqa: E402
from .entanglement import (  # noqa: E402
    DensityMatrix,
    closed_form_concurrence,
    thermal_concurrence,
    thermal_state,
    wootters_concurrence,
)
from .scan import critical_beta, phase_boundary  # noqa: E402
