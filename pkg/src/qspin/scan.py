"""Parameter sweeps, the thermal entanglement phase boundary, and unit conversion.

Grid nodes are independent pure evaluations, so sweeps fan out over a
process pool. Results are always assembled in grid order, which makes a
sweep bit-for-bit reproducible regardless of worker count.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np
from scipy import constants

from .entanglement import closed_form_concurrence, thermal_concurrence
from .errors import BracketFailure, NoTransition
from .model import MODES, ModelParams

log = logging.getLogger(__name__)

ONSET_EPS = 1e-9
BETA_BRACKET = (1e-4, 50.0)
MAX_BISECTIONS = 80
PARALLEL_MIN_NODES = 256
# 4I(2I-1) for I = 3/2: omega_Q = e^2 Qq / 12
QUADRUPOLE_DIVISOR = 12.0


@dataclass(frozen=True)
class Axis:
    """Sample points along one grid dimension."""

    values: tuple

    @classmethod
    def linspace(cls, lo: float, hi: float, count: int) -> "Axis":
        _check_range(lo, hi, count)
        return cls(tuple(float(x) for x in np.linspace(lo, hi, count)))

    @classmethod
    def logspace(cls, lo: float, hi: float, count: int) -> "Axis":
        _check_range(lo, hi, count)
        if lo <= 0:
            raise ValueError("log-spaced axis needs a positive lower end")
        return cls(tuple(float(x) for x in np.geomspace(lo, hi, count)))

    @classmethod
    def of(cls, *values: float) -> "Axis":
        if not values:
            raise ValueError("axis needs at least one value")
        return cls(tuple(float(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _check_range(lo, hi, count):
    if count < 1:
        raise ValueError("count must be >= 1")
    if count == 1 and lo != hi:
        raise ValueError("a single-node axis needs min == max")
    if count >= 2 and not lo < hi:
        raise ValueError(f"need min < max, got {lo} >= {hi}")


@dataclass(frozen=True)
class GridSpec:
    alpha_range: Axis
    beta_range: Axis = Axis.of(0.0)
    eta_range: Axis = Axis.of(0.14)
    mode: str = "paper"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        # validates every node against the ModelParams domain
        for a, b, e in product(self.alpha_range, self.beta_range, self.eta_range):
            ModelParams(a, e, b, self.mode)


@dataclass(frozen=True)
class PhaseBoundaryPoint:
    alpha: float
    beta_c: float
    eta: float


def _is_entangled(alpha, eta, beta, mode) -> bool:
    return thermal_concurrence(ModelParams(alpha, eta, beta, mode)) > ONSET_EPS


def critical_beta(
    alpha: float,
    eta: float,
    tol: float = 1e-6,
    mode: str = "paper",
    bracket: tuple = BETA_BRACKET,
) -> float:
    """Inverse temperature at which thermal concurrence first becomes nonzero.

    Bisects on ``log β`` inside ``bracket`` for the crossing of
    ``C_T(β) = ONSET_EPS`` and stops once the bracket width is below
    ``tol`` relative to its upper end.

    Raises
    ------
    NoTransition
        Separable at the top of the bracket (lowest temperature).
    BracketFailure
        Already entangled at the bottom of the bracket, or not entangled just
        above the located crossing.
    """
    if alpha <= 0:
        raise NoTransition("no entanglement without an applied field")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = bracket
    if not _is_entangled(alpha, eta, hi, mode):
        raise NoTransition(f"separable over beta in [{lo}, {hi}] at alpha={alpha}")
    if _is_entangled(alpha, eta, lo, mode):
        raise BracketFailure(f"already entangled at beta={lo} (alpha={alpha})")

    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol * hi:
            break
        mid = math.sqrt(lo * hi)
        if _is_entangled(alpha, eta, mid, mode):
            hi = mid
        else:
            lo = mid
    beta_c = 0.5 * (lo + hi)

    if not _is_entangled(alpha, eta, beta_c * 1.01, mode):
        raise BracketFailure(f"concurrence not monotone above beta_c={beta_c:.6g}")
    return beta_c


def _worker_count(workers: Optional[int]) -> int:
    if workers is None:
        env = os.environ.get("QSPIN_THREADS")
        workers = int(env) if env else (os.cpu_count() or 1)
    return max(1, workers)


def _parallel_map(func, items: list, workers: Optional[int]) -> list:
    n = _worker_count(workers)
    if n == 1 or len(items) < PARALLEL_MIN_NODES:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (4 * n))
    with ProcessPoolExecutor(max_workers=n) as pool:
        # map preserves input order, independent of completion order
        return list(pool.map(func, items, chunksize=chunk))


def _pure_node(node):
    alpha, eta, mode = node
    return (alpha, eta, closed_form_concurrence(ModelParams(alpha, eta, mode=mode)))


def _thermal_node(node):
    alpha, beta, eta, mode = node
    return (alpha, beta, eta, thermal_concurrence(ModelParams(alpha, eta, beta, mode)))


def sweep_pure(g: GridSpec, workers: Optional[int] = None) -> list:
    """Ground-state concurrence rows ``(alpha, eta, C)``, alpha-major."""
    nodes = [(a, e, g.mode) for a, e in product(g.alpha_range, g.eta_range)]
    return _parallel_map(_pure_node, nodes, workers)


def sweep_thermal(g: GridSpec, workers: Optional[int] = None) -> list:
    """Thermal concurrence rows ``(alpha, beta, eta, C_T)`` in (alpha, beta, eta) order."""
    nodes = [
        (a, b, e, g.mode) for a, b, e in product(g.alpha_range, g.beta_range, g.eta_range)
    ]
    return _parallel_map(_thermal_node, nodes, workers)


def _boundary_node(args):
    alpha, eta, tol, mode = args
    try:
        return PhaseBoundaryPoint(alpha, critical_beta(alpha, eta, tol, mode), eta)
    except NoTransition as exc:
        return str(exc)


def phase_boundary(
    alphas: Sequence[float],
    eta: float,
    tol: float = 1e-6,
    mode: str = "paper",
    workers: Optional[int] = None,
) -> list:
    """Critical ``beta_c`` for each field value; fields with no transition are skipped."""
    alphas = [float(a) for a in alphas]
    if any(a <= 0 for a in alphas):
        raise ValueError("alphas must be positive")
    if any(b < a for a, b in zip(alphas, alphas[1:])):
        raise ValueError("alphas must be ascending")
    results = _parallel_map(_boundary_node, [(a, eta, tol, mode) for a in alphas], workers)
    points = []
    for alpha, res in zip(alphas, results):
        if isinstance(res, PhaseBoundaryPoint):
            points.append(res)
        else:
            log.warning("alpha=%g omitted from phase boundary: %s", alpha, res)
    return points


def cu63_temperature(beta: float, eqq_mhz: float, convention: str = "cyclic") -> float:
    """Spin temperature in kelvin for a normalized inverse temperature ``beta``.

    ``eqq_mhz`` is the quadrupole coupling constant ``e²Qq``. With the cyclic
    convention it is read as a frequency in MHz (energy ``h·ν``); with the
    angular convention as an angular frequency in 10⁶ rad/s (energy ``ħ·ω``).
    """
    if beta <= 0 or eqq_mhz <= 0:
        raise ValueError("beta and eqq_mhz must be positive")
    energy = constants.h * eqq_mhz * 1e6 / QUADRUPOLE_DIVISOR
    if convention == "angular":
        energy /= 2 * math.pi
    elif convention != "cyclic":
        raise ValueError("convention must be 'cyclic' or 'angular'")
    return energy / (constants.k * beta)


# Standard figure data sets: fixed parameters follow the reference plots,
# swept ranges are a free choice.
PRESETS = {
    "fig1": dict(
        kind="pure", alpha=Axis.linspace(0.01, 5.0, 100), eta=Axis.linspace(0.0, 1.0, 11)
    ),
    "fig2a": dict(
        kind="thermal",
        alpha=Axis.of(0.5),
        beta=Axis.of(1, 2, 3, 4),
        eta=Axis.linspace(0.0, 1.0, 51),
    ),
    "fig2b": dict(
        kind="thermal",
        alpha=Axis.of(0.5, 1, 2, 3),
        beta=Axis.of(2),
        eta=Axis.linspace(0.0, 1.0, 51),
    ),
    "fig3": dict(
        kind="thermal",
        alpha=Axis.linspace(0.0, 5.0, 51),
        beta=Axis.linspace(0.0, 4.0, 41),
        eta=Axis.of(0.14),
    ),
    "fig4": dict(kind="boundary", alpha=Axis.logspace(0.01, 100.0, 41), eta=Axis.of(0.14)),
    "fig5": dict(
        kind="thermal",
        alpha=Axis.of(1, 2, 3, 4),
        beta=Axis.linspace(0.0, 4.0, 81),
        eta=Axis.of(0.14),
    ),
    "fig6": dict(
        kind="thermal",
        alpha=Axis.linspace(0.0, 5.0, 101),
        beta=Axis.of(1, 2, 3, 4),
        eta=Axis.of(0.14),
    ),
}
