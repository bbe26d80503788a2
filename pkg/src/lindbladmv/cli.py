"""Command-line front end.

Subcommands: ``make-tls`` (model file generator), ``superop`` (print the
vectorized generator matrix), ``spectrum`` (eigenvalues by any of the three
representations), ``propagate`` (observable trajectories as CSV),
``degeneracy`` (eigenvalue clusters / exceptional points) and ``bench``
(scaling benchmark).  Data goes to stdout or ``--out``; diagnostics go to
stderr.  Exit codes: 0 success, 2 parse/validation error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, arnoldi, heisenberg, modelio, tls, vectorized
from .errors import NumericalError, ValidationError
from .linalg import hs_norm
from .model import validate_state

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def _fmt(x: float) -> str:
    return repr(float(x))


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _sorted_eigenvalues(values) -> np.ndarray:
    values = np.asarray(values)
    order = np.lexsort((values.imag, values.real))
    return values[order]


def cmd_make_tls(args) -> int:
    params = tls.TLSParams(args.detuning, args.drive, args.decay)
    model = tls.build_tls(params)
    modelio.save_model(args.out, model, basis_labels=tls.BASIS_LABELS)
    return EXIT_OK


def cmd_superop(args) -> int:
    model = modelio.load_model(args.model)
    superop = vectorized.build_superoperator(model)
    lines = [f"# vec convention: {superop.convention}", "row,col,re,im"]
    size = superop.matrix.shape[0]
    for i in range(size):
        for j in range(size):
            z = superop.matrix[i, j]
            lines.append(f"{i},{j},{_fmt(z.real)},{_fmt(z.imag)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    model = modelio.load_model(args.model)
    if args.method == "vec":
        values = vectorized.spectrum(vectorized.build_superoperator(model)).eigenvalues
    elif args.method == "arnoldi":
        if not args.state:
            raise ValidationError("--method arnoldi requires --state")
        rho0 = modelio.load_state(args.state)
        k = args.krylov_dim if args.krylov_dim is not None else model.dim**2 - 1
        reduction = arnoldi.arnoldi_reduce(model, rho0, k)
        values = arnoldi.ritz_values(reduction).eigenvalues
    elif args.method == "heisenberg":
        if not args.basis:
            raise ValidationError("--method heisenberg requires --basis")
        ops = [matrix for _, matrix in modelio.load_observables(args.basis)]
        rep = heisenberg.close_set(model, ops)
        # conjugate so all three methods print directly comparable values
        values = np.conj(heisenberg.adjoint_spectrum(rep).eigenvalues)
    else:
        raise ValidationError(f"unknown method {args.method!r}")
    lines = [f"{_fmt(z.real)},{_fmt(z.imag)}" for z in _sorted_eigenvalues(values)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _trajectory_rows(model, rho0, observables, times, method, krylov_dim):
    labels = [label for label, _ in observables]
    ops = [matrix for _, matrix in observables]
    if method in ("vec", "expm-action"):
        superop = vectorized.build_superoperator(model)
        inner = "expm" if method == "vec" else "expm_action"
        states = vectorized.propagate(superop, rho0, times, method=inner)
        rows = [
            [complex(np.trace(op @ state.matrix)) for op in ops] for state in states
        ]
    elif method == "arnoldi":
        k = krylov_dim if krylov_dim is not None else model.dim**2 - 1
        reduction = arnoldi.arnoldi_reduce(model, rho0, k)
        norm0 = hs_norm(rho0.matrix)
        rows = []
        for t in times:
            state = arnoldi.propagate_reduced(reduction, t) * norm0
            rows.append([complex(np.trace(op @ state)) for op in ops])
    elif method == "heisenberg":
        rep = heisenberg.close_set(model, ops)
        initial = heisenberg.expectations(rep.basis, rho0)
        rows = [row for row in heisenberg.propagate_expectations(rep, initial, times)]
    else:
        raise ValidationError(f"unknown propagation method {method!r}")
    return labels, rows


def cmd_propagate(args) -> int:
    model = modelio.load_model(args.model)
    rho0 = validate_state(modelio.load_state(args.state))
    observables = modelio.load_observables(args.observables)
    if args.steps < 1:
        raise ValidationError(f"--steps must be >= 1, got {args.steps}")
    if args.t1 < args.t0:
        raise ValidationError(f"--t1 must be >= --t0, got {args.t0} > {args.t1}")
    times = np.linspace(args.t0, args.t1, args.steps)
    labels, rows = _trajectory_rows(model, rho0, observables, times, args.method, args.krylov_dim)
    header = "t," + ",".join(f"{label}_re,{label}_im" for label in labels)
    lines = [header]
    for t, row in zip(times, rows):
        cells = [_fmt(t)]
        for z in row:
            cells.append(_fmt(z.real))
            cells.append(_fmt(z.imag))
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    model = modelio.load_model(args.model)
    superop = vectorized.build_superoperator(model)
    report = analysis.detect_degeneracy(superop, args.cluster_tol)
    lines = []
    for cluster in report.clusters:
        lines.append(
            f"cluster size={cluster.size} "
            f"center=({cluster.center.real:.6g},{cluster.center.imag:.6g}) "
            f"diameter={cluster.diameter:.3e}"
        )
    lines.append(f"eigenvector_condition: {report.eigenvector_condition:.6e}")
    lines.append(f"defective: {'yes' if report.defective else 'no'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    dims = [int(s) for s in args.dims.split(",") if s]
    methods = [s for s in args.methods.split(",") if s]
    records = analysis.run_benchmark(
        dims, methods, seed=args.seed, repeats=args.repeats, timeout_s=args.timeout
    )
    lines = ["n,method,wall_time_s,result_error,status"]
    for rec in records:
        err = "" if np.isnan(rec.result_error) else _fmt(rec.result_error)
        lines.append(f"{rec.n},{rec.method},{_fmt(rec.wall_time_s)},{err},{rec.status}")
    _emit("\n".join(lines) + "\n", args.out)
    slopes = analysis.fit_scaling_slopes(records)
    for method in sorted(slopes, key=slopes.get):
        sys.stdout.write(f"slope {method} = {slopes[method]:.3f}\n")
    if len(slopes) > 1:
        ordering = " < ".join(sorted(slopes, key=slopes.get))
        sys.stdout.write(f"slope ordering: {ordering}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lindbladmv",
        description="Markovian open-system dynamics as matrix-vector linear systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make-tls", help="write a driven two-level model file")
    p.add_argument("--detuning", type=float, required=True)
    p.add_argument("--drive", type=float, required=True)
    p.add_argument("--decay", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_make_tls)

    p = sub.add_parser("superop", help="print the vectorized generator matrix")
    p.add_argument("model")
    p.add_argument("--out")
    p.set_defaults(func=cmd_superop)

    p = sub.add_parser("spectrum", help="print eigenvalues, one re,im pair per line")
    p.add_argument("model")
    p.add_argument("--method", choices=("vec", "arnoldi", "heisenberg"), default="vec")
    p.add_argument("--state", help="initial state file (arnoldi)")
    p.add_argument("--krylov-dim", type=int, dest="krylov_dim")
    p.add_argument("--basis", help="operator basis file (heisenberg)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("propagate", help="emit observable trajectories as CSV")
    p.add_argument("model")
    p.add_argument("--state", required=True)
    p.add_argument("--observables", required=True)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("vec", "expm-action", "arnoldi", "heisenberg"),
        default="vec",
    )
    p.add_argument("--krylov-dim", type=int, dest="krylov_dim")
    p.add_argument("--out")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("degeneracy", help="report eigenvalue clusters and defectiveness")
    p.add_argument("model")
    p.add_argument("--cluster-tol", type=float, required=True, dest="cluster_tol")
    p.add_argument("--out")
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("bench", help="run the scaling benchmark and write its CSV")
    p.add_argument("--dims", required=True, help="comma-separated Hilbert dimensions")
    p.add_argument("--methods", required=True, help="comma-separated method tags")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--timeout", type=float, default=None, help="per-cell budget in seconds")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except NumericalError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
