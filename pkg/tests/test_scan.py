import math

import numpy as np
import pytest

from qspin import scan
from qspin.entanglement import thermal_concurrence
from qspin.errors import BracketFailure, DegenerateGround, NoTransition
from qspin.model import ModelParams
from qspin.scan import (
    Axis,
    GridSpec,
    PRESETS,
    critical_beta,
    cu63_temperature,
    phase_boundary,
    sweep_pure,
    sweep_thermal,
)

ETA = 0.14


def test_axis_constructors():
    assert Axis.linspace(0, 1, 3).values == (0.0, 0.5, 1.0)
    assert Axis.logspace(1, 100, 3).values == pytest.approx((1.0, 10.0, 100.0))
    assert Axis.of(2).values == (2.0,)
    assert Axis.linspace(1, 1, 1).values == (1.0,)
    for bad in [(1, 0, 3), (0, 1, 0), (0, 1, 1)]:
        with pytest.raises(ValueError):
            Axis.linspace(*bad)
    with pytest.raises(ValueError):
        Axis.logspace(0, 1, 3)


def test_gridspec_validates_domain():
    with pytest.raises(ValueError):
        GridSpec(Axis.of(1.0), eta_range=Axis.linspace(0, 2, 3))
    with pytest.raises(ValueError):
        GridSpec(Axis.of(-1.0))
    with pytest.raises(ValueError):
        GridSpec(Axis.of(1.0), mode="nope")


def test_critical_beta_alpha1():
    assert critical_beta(1.0, ETA) == pytest.approx(0.24, abs=0.03)


def test_critical_beta_high_field_asymptote():
    bc = critical_beta(100.0, ETA)
    assert 100 * bc == pytest.approx(0.85, rel=0.10)


def test_critical_beta_zero_field():
    with pytest.raises(NoTransition):
        critical_beta(0.0, ETA)


def test_tiny_field_still_entangles_when_cold():
    # the zero-field separability does not survive any finite field
    assert thermal_concurrence(ModelParams(1e-3, ETA, 50.0)) > 1e-3


def test_critical_beta_bracket_errors():
    with pytest.raises(NoTransition):
        critical_beta(1.0, ETA, bracket=(1e-4, 0.1))
    with pytest.raises(BracketFailure):
        critical_beta(1.0, ETA, bracket=(0.5, 50.0))


@pytest.mark.parametrize("alpha", [0.1, 0.5, 1.0, 2.0, 4.0, 20.0, 100.0])
def test_boundary_brackets_onset(alpha):
    bc = critical_beta(alpha, ETA)
    assert thermal_concurrence(ModelParams(alpha, ETA, bc * 0.99)) <= 1e-9
    assert thermal_concurrence(ModelParams(alpha, ETA, bc * 1.01)) > 1e-9
    assert thermal_concurrence(ModelParams(alpha, ETA, bc * (1 - 1e-4))) <= 1e-9
    assert thermal_concurrence(ModelParams(alpha, ETA, bc * (1 + 1e-4))) > 0


def test_exact_mode_boundary_close_to_paper_mode():
    assert critical_beta(1.0, ETA, mode="exact") == pytest.approx(critical_beta(1.0, ETA), abs=0.01)


def test_phase_boundary_examples():
    (pt,) = phase_boundary([1.0], ETA)
    assert pt.alpha == 1.0 and pt.eta == ETA
    assert pt.beta_c == pytest.approx(0.24, abs=0.03)
    bcs = [p.beta_c for p in phase_boundary([0.5, 1, 2, 4], ETA)]
    assert all(b1 > b2 for b1, b2 in zip(bcs, bcs[1:]))


def test_phase_boundary_omits_no_transition(monkeypatch, caplog):
    real = scan.critical_beta

    def fake(alpha, *args, **kwargs):
        if alpha == 2.0:
            raise NoTransition("forced")
        return real(alpha, *args, **kwargs)

    monkeypatch.setattr(scan, "critical_beta", fake)
    pts = phase_boundary([1.0, 2.0, 4.0], ETA, workers=1)
    assert [p.alpha for p in pts] == [1.0, 4.0]
    assert "alpha=2 omitted" in caplog.text


def test_phase_boundary_input_checks():
    with pytest.raises(ValueError):
        phase_boundary([2.0, 1.0], ETA)
    with pytest.raises(ValueError):
        phase_boundary([0.0, 1.0], ETA)


def test_sweep_pure_examples():
    (row,) = sweep_pure(GridSpec(Axis.of(1.0), eta_range=Axis.of(0.0)))
    assert row[2] == pytest.approx(0.970725343394, abs=1e-12)
    (row,) = sweep_pure(GridSpec(Axis.of(1e4), eta_range=Axis.of(0.0)))
    assert row[2] == pytest.approx(0.5, abs=5e-4)
    rows = sweep_pure(GridSpec(Axis.of(1.0, 2.0), eta_range=Axis.of(0.0, 1.0)))
    assert [r[:2] for r in rows] == [(1, 0), (1, 1), (2, 0), (2, 1)]


def test_sweep_pure_zero_field_propagates():
    with pytest.raises(DegenerateGround):
        sweep_pure(GridSpec(Axis.of(0.0)))


def test_sweep_thermal_examples():
    rows = sweep_thermal(
        GridSpec(Axis.of(0.0, 1.0, 100.0), Axis.of(0.1, 4.0), Axis.of(ETA))
    )
    table = {(a, b): c for a, b, _, c in rows}
    assert table[1.0, 0.1] == 0
    assert table[0.0, 0.1] == 0 and table[0.0, 4.0] == 0
    assert table[100.0, 4.0] == pytest.approx(0.5, abs=0.03)
    assert [r[:2] for r in rows] == [(a, b) for a in (0, 1, 100) for b in (0.1, 4.0)]


def test_sweep_determinism_across_workers():
    g = GridSpec(Axis.linspace(0.0, 5.0, 20), Axis.linspace(0.0, 4.0, 15), Axis.of(ETA))
    assert len(g.alpha_range) * len(g.beta_range) >= scan.PARALLEL_MIN_NODES
    serial = sweep_thermal(g, workers=1)
    assert sweep_thermal(g, workers=1) == serial
    assert sweep_thermal(g, workers=3) == serial


def test_worker_env(monkeypatch):
    monkeypatch.setenv("QSPIN_THREADS", "3")
    assert scan._worker_count(None) == 3
    assert scan._worker_count(2) == 2


def test_monotone_in_beta_above_threshold():
    for alpha in (1, 2, 3, 4):
        bc = critical_beta(alpha, ETA)
        cs = [thermal_concurrence(ModelParams(alpha, ETA, b)) for b in np.linspace(bc, 4, 50)]
        assert all(c2 >= c1 for c1, c2 in zip(cs, cs[1:]))


def test_interior_maximum_in_field():
    alphas = np.geomspace(0.1, 100, 60)
    peaks = []
    for beta in (2, 3, 4):
        cs = [thermal_concurrence(ModelParams(a, ETA, beta)) for a in alphas]
        k = int(np.argmax(cs))
        assert 0 < k < len(alphas) - 1
        peaks.append((alphas[k], cs[k]))
    assert peaks[0][1] < peaks[1][1] < peaks[2][1]
    assert peaks[0][0] > peaks[1][0] > peaks[2][0]


def test_cu63_temperature():
    t = cu63_temperature(0.24, 62.8, "cyclic")
    # h * 62.8 MHz / 12 / (k_B * 0.24), 30-digit arithmetic
    assert t == pytest.approx(1.04650161460902e-3, rel=1e-12)
    assert cu63_temperature(0.48, 62.8) == pytest.approx(t / 2, rel=1e-15)
    assert t / cu63_temperature(0.24, 62.8, "angular") == pytest.approx(2 * math.pi, rel=1e-15)
    with pytest.raises(ValueError):
        cu63_temperature(0.24, 62.8, "hertz")
    with pytest.raises(ValueError):
        cu63_temperature(0.0, 62.8)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_are_valid_grids(name):
    preset = PRESETS[name]
    if preset["kind"] == "boundary":
        assert all(a > 0 for a in preset["alpha"])
        return
    GridSpec(preset["alpha"], preset.get("beta", Axis.of(0.0)), preset["eta"])
    if preset["kind"] == "pure":
        assert min(preset["alpha"]) > 0
