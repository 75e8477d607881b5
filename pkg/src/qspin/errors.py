"""Exception hierarchy.

Domain errors are raised when a request falls outside the physics the
model covers (degenerate ground state, no thermal transition, ...).
Numerical errors signal a failed precondition or a solver that did not
converge. The CLI maps the two families to distinct exit codes.
"""


class QSpinError(Exception):
    """Base class for all package errors."""


class DomainError(QSpinError):
    pass


class NumericalError(QSpinError):
    pass


class NotHermitian(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class NegativeEigenvalue(NumericalError):
    pass


class DegenerateGround(DomainError):
    """Ground state is degenerate (zero applied field).

    ``concurrence`` carries the physically meaningful value for callers that
    want it: a pure NQR system holds no entanglement.
    """

    concurrence = 0.0


class ModeUnsupported(DomainError):
    pass


class NotNormalized(DomainError):
    pass


class InvalidState(DomainError):
    pass


class NoTransition(DomainError):
    pass


class BracketFailure(DomainError):
    pass
