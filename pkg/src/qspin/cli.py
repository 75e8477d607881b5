"""Command-line interface: ``qspin <subcommand> [options]``.

Tables are written as CSV (header row, '.' decimals) or as a JSON array of
row objects. Exit codes: 0 success, 2 bad arguments, 3 domain error,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import sys
from contextlib import contextmanager


from . import __version__, pauli
from .checks import run_checks
from .entanglement import (
    closed_form_concurrence,
    pure_concurrence,
    thermal_state,
    wootters_concurrence,
)
from .errors import DomainError, NumericalError
from .linalg import herm_eigensolve
from .model import (
    ModelParams,
    analytic_energies,
    consistency_report,
    ground_amplitudes,
    hamiltonian_spin32,
    hamiltonian_two_qubit,
    quadrupole_spin32,
    resonance_frequencies,
    spin32_operators,
)
from .scan import (
    PRESETS,
    Axis,
    GridSpec,
    cu63_temperature,
    phase_boundary,
    sweep_pure,
    sweep_thermal,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERIC = 0, 2, 3, 4

log = logging.getLogger("qspin")


class UsageError(Exception):
    pass


def _fmt(value, digits: int) -> str:
    if isinstance(value, str):
        return value
    if value is None:
        return ""
    return f"{value:.{digits}g}"


@contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def emit_table(args, header, rows):
    with _open_out(args.output) as fh:
        if args.format == "json":
            json.dump([dict(zip(header, r)) for r in rows], fh, indent=1)
            fh.write("\n")
            return
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for r in rows:
            writer.writerow([_fmt(v, args.digits) for v in r])


def emit_scalar(args, value):
    with _open_out(args.output) as fh:
        fh.write(f"{value:.{args.decimals}f}\n")


def _params(args, beta=0.0):
    return ModelParams(args.alpha, args.eta, beta, args.mode)


def _axis(values=None, rng=None, log_scale=False):
    if values:
        return Axis.of(*values)
    if rng:
        lo, hi, count = rng
        count = int(count)
        return Axis.logspace(lo, hi, count) if log_scale else Axis.linspace(lo, hi, count)
    return None


OPERATORS = {
    "ix": lambda a: spin32_operators()[0],
    "iy": lambda a: spin32_operators()[1],
    "iz": lambda a: spin32_operators()[2],
    "hq": lambda a: quadrupole_spin32(a.eta),
    "hz": lambda a: a.alpha * spin32_operators()[0],
    "h": lambda a: hamiltonian_spin32(ModelParams(a.alpha, a.eta)),
    "h2q": lambda a: hamiltonian_two_qubit(ModelParams(a.alpha, a.eta, mode=a.mode)),
}


def cmd_decompose(args):
    coeffs = pauli.decompose(OPERATORS[args.operator](args))
    if not args.all:
        coeffs = pauli.nonzero(coeffs, args.zero_tol)
    rows = [(str(idx), c.real, c.imag) for idx, c in coeffs.items()]
    emit_table(args, ["index", "re", "im"], rows)


def cmd_spectrum(args):
    p = _params(args)
    numeric = herm_eigensolve(hamiltonian_two_qubit(p)).values
    analytic = analytic_energies(p) if p.mode == "paper" else [None] * 4
    rows = [(k, float(n), None if a is None else float(a)) for k, (n, a) in enumerate(zip(numeric, analytic))]
    emit_table(args, ["level", "numeric", "analytic"], rows)


def cmd_ground(args):
    p = _params(args)
    g = ground_amplitudes(p)
    res = resonance_frequencies(p)
    rows = [(g.a_minus, g.b_plus, g.b_minus, g.a_plus, g.d, pure_concurrence(g), res.omega1, res.omega2)]
    emit_table(args, ["a_minus", "b_plus", "b_minus", "a_plus", "d", "C", "Omega1", "Omega2"], rows)


def cmd_concurrence(args):
    emit_scalar(args, closed_form_concurrence(_params(args)))


def cmd_thermal(args):
    res = wootters_concurrence(thermal_state(_params(args, args.beta)))
    if args.lambdas:
        emit_table(args, ["C_T", "lambda1", "lambda2", "lambda3", "lambda4"], [(res.concurrence, *res.lambdas)])
    else:
        emit_scalar(args, res.concurrence)


def cmd_boundary(args):
    eta = args.eta
    if args.preset:
        preset = PRESETS[args.preset]
        alphas = preset["alpha"].values
        eta = preset["eta"].values[0] if eta is None else eta
    elif args.alpha:
        alphas = args.alpha
    else:
        raise UsageError("boundary needs --alpha or --preset")
    eta = 0.14 if eta is None else eta
    points = phase_boundary(sorted(alphas), eta, args.tol, args.mode, args.workers)
    emit_table(args, ["alpha", "beta_c", "eta"], [(p.alpha, p.beta_c, p.eta) for p in points])


def _grid(args, kind):
    axes = {}
    if args.preset:
        preset = PRESETS[args.preset]
        if preset["kind"] != kind:
            raise UsageError(f"preset {args.preset} is not a {kind} sweep")
        axes = {k: preset[k] for k in ("alpha", "beta", "eta") if k in preset}
    for name in ("alpha", "beta", "eta"):
        if not hasattr(args, f"{name}_range"):
            continue
        ax = _axis(
            getattr(args, f"{name}_values"),
            getattr(args, f"{name}_range"),
            getattr(args, f"log_{name}", False),
        )
        if ax is not None:
            axes[name] = ax
    if "alpha" not in axes:
        raise UsageError("sweep needs an alpha axis (--alpha-range, --alpha-values or --preset)")
    axes.setdefault("eta", Axis.of(0.14))
    axes.setdefault("beta", Axis.of(0.0))
    return GridSpec(axes["alpha"], axes["beta"], axes["eta"], args.mode)


def cmd_sweep_pure(args):
    rows = sweep_pure(_grid(args, "pure"), args.workers)
    emit_table(args, ["alpha", "eta", "C"], rows)


def cmd_sweep_thermal(args):
    rows = sweep_thermal(_grid(args, "thermal"), args.workers)
    emit_table(args, ["alpha", "beta", "eta", "C_T"], rows)


def cmd_report(args):
    rep = consistency_report(_params(args))
    fields = dataclasses.asdict(rep)
    fields["eta_coeff_ratio"] = rep.eta_coeff_ratio
    if args.format == "json":
        with _open_out(args.output) as fh:
            json.dump(fields, fh, indent=1)
            fh.write("\n")
        return
    rows = []
    for key, val in fields.items():
        if isinstance(val, (tuple, list)):
            rows.extend((f"{key}[{i}]", v) for i, v in enumerate(val))
        else:
            rows.append((key, val))
    emit_table(args, ["quantity", "value"], rows)


def cmd_cu63(args):
    rows = [(conv, cu63_temperature(args.beta, args.eqq, conv)) for conv in ("cyclic", "angular")]
    emit_table(args, ["convention", "T_K"], rows)


def cmd_check(args):
    failed = 0
    out = sys.stdout
    for name, ok, detail in run_checks(args.seed):
        failed += not ok
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}\n")
    return EXIT_OK if failed == 0 else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    common.add_argument("--digits", type=int, default=9, help="significant digits in tables")
    common.add_argument("--decimals", type=int, default=6, help="decimals for scalar output")
    common.add_argument("--mode", choices=("paper", "exact"), default="paper")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--alpha", type=float, required=True, help="normalized field w0/wQ")
    field.add_argument("--eta", type=float, default=0.0, help="asymmetry parameter (default 0)")

    parallel = argparse.ArgumentParser(add_help=False)
    parallel.add_argument(
        "--workers", type=int, default=None, help="worker processes (default: $QSPIN_THREADS or CPU count)"
    )

    parser = argparse.ArgumentParser(prog="qspin", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="Pauli coefficients of an operator")
    p.add_argument("operator", choices=sorted(OPERATORS))
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--all", action="store_true", help="include zero coefficients")
    p.add_argument("--zero-tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("spectrum", parents=[common, field], help="energy levels")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ground", parents=[common, field], help="ground-state amplitudes")
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("concurrence", parents=[common, field], help="ground-state concurrence")
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("thermal", parents=[common], help="thermal (Wootters) concurrence")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--eta", type=float, default=0.14)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--lambdas", action="store_true", help="also print the spin-flip spectrum")
    p.set_defaults(func=cmd_thermal)

    p = sub.add_parser("boundary", parents=[common, parallel], help="critical inverse temperature")
    p.add_argument("--alpha", type=float, nargs="+")
    p.add_argument("--eta", type=float, default=None, help="default 0.14")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--preset", choices=[k for k, v in PRESETS.items() if v["kind"] == "boundary"])
    p.set_defaults(func=cmd_boundary)

    for name, kind, func, axes in (
        ("sweep-pure", "pure", cmd_sweep_pure, ("alpha", "eta")),
        ("sweep-thermal", "thermal", cmd_sweep_thermal, ("alpha", "beta", "eta")),
    ):
        p = sub.add_parser(name, parents=[common, parallel], help=f"{kind} concurrence on a grid")
        for ax in axes:
            g = p.add_mutually_exclusive_group()
            g.add_argument(f"--{ax}-range", type=float, nargs=3, metavar=("MIN", "MAX", "COUNT"))
            g.add_argument(f"--{ax}-values", type=float, nargs="+")
            p.add_argument(f"--log-{ax}", action="store_true", help=f"log-spaced {ax} range")
        p.add_argument("--preset", choices=[k for k, v in PRESETS.items() if v["kind"] == kind])
        p.set_defaults(func=func)

    p = sub.add_parser("report", parents=[common, field], help="printed-formula consistency report")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("cu63", parents=[common], help="convert beta to kelvin")
    p.add_argument("--beta", type=float, default=0.24)
    p.add_argument("--eqq", type=float, default=62.8, help="quadrupole coupling e^2Qq in MHz")
    p.set_defaults(func=cmd_cu63)

    p = sub.add_parser("check", help="run the invariant self-check suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"qspin {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"qspin {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"qspin {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())
