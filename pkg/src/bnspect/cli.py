"""Command-line surface: gen | analyze | verify | sample | estimate | experiment.

Exit codes: 0 success (verdicts are data, not errors), 1 I/O failure,
2 malformed input or bad flags, 3 counterexample found by `verify`.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

import numpy as np

from .analysis import analyze_model, analyze_omega, render_report
from .errors import ModelFormatError, SingularCovariance
from .linear_bn import LinearBn, verify_theorem1
from .model_io import format_float, parse_model, serialize_model
from .random_models import (empirical_normalized_precision, random_bounded_indegree_bn,
                            random_erdos_bn, random_forest_bn, sample_data)
from .spectral import symmetric_eigenvalues, symmetry_about, tree_test_lambda

EXIT_OK = 0
EXIT_IO = 1
EXIT_BAD_INPUT = 2
EXIT_COUNTEREXAMPLE = 3

DEFAULT_TOL = 1e-8


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _default_tol() -> float:
    env = os.environ.get("BNSPECT_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise CliError(f"BNSPECT_TOL is not a number: {env!r}", EXIT_BAD_INPUT)


def _resolve_tol(args: argparse.Namespace) -> float:
    # the --tol flag wins over the environment variable
    return args.tol if args.tol is not None else _default_tol()


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO)


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO)


def _load_model(path: str) -> LinearBn:
    text = _read_text(path)
    try:
        return parse_model(text)
    except ModelFormatError as exc:
        raise CliError(f"malformed model {path}: {exc}", EXIT_BAD_INPUT)


def _generate(kind: str, args: argparse.Namespace) -> LinearBn:
    if kind == "forest":
        return random_forest_bn(args.n, args.seed)
    if kind == "bounded":
        if args.K is None:
            raise CliError("gen bounded requires --K", EXIT_BAD_INPUT)
        return random_bounded_indegree_bn(args.n, args.K, args.seed)
    if kind == "erdos":
        if args.p is None:
            raise CliError("gen erdos requires --p", EXIT_BAD_INPUT)
        if not 0 <= args.p <= 1:
            raise CliError("--p must be in [0, 1]", EXIT_BAD_INPUT)
        return random_erdos_bn(args.n, args.p, args.seed)
    raise CliError(f"unknown model kind {kind!r}", EXIT_BAD_INPUT)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError("--n must be >= 1", EXIT_BAD_INPUT)
    bn = _generate(args.kind, args)
    _write_text(args.out, serialize_model(bn))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    bn = _load_model(args.model)
    report = analyze_model(bn, _resolve_tol(args))
    _write_text(args.out, render_report(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bn = _load_model(args.model)
    tol = _resolve_tol(args)
    if args.theorem == 1:
        identity = verify_theorem1(bn, tol)
        print(f"precision residual: {format_float(identity.precision_residual)} "
              f"(scale {format_float(identity.precision_scale)})")
        print(f"omega residual: {format_float(identity.omega_residual)}")
        if identity.passed:
            print("theorem 1: identity confirmed")
            return EXIT_OK
        print("theorem 1: COUNTEREXAMPLE (residuals exceed tolerance)")
        return EXIT_COUNTEREXAMPLE

    forest = bn.dag.moralize().is_forest()
    omega = bn.precision().normalized_precision
    if not forest:
        print("hypothesis not satisfied (moral graph is not a forest); "
              "implication vacuous")
        return EXIT_OK
    if args.theorem == 2:
        verdict = tree_test_lambda(omega, tol)
        print(f"lambda1: {format_float(verdict.statistic)} "
              f"(threshold {format_float(verdict.threshold)})")
        if verdict.passed:
            print("theorem 2: bound confirmed")
            return EXIT_OK
        print("theorem 2: COUNTEREXAMPLE")
        _print_witness(omega)
        return EXIT_COUNTEREXAMPLE
    symmetric, residual = symmetry_about(symmetric_eigenvalues(omega), 1.0, tol)
    print(f"symmetry residual about 1: {format_float(residual)}")
    if symmetric:
        print("theorem 3: symmetry confirmed")
        return EXIT_OK
    print("theorem 3: COUNTEREXAMPLE")
    _print_witness(omega)
    return EXIT_COUNTEREXAMPLE


def _print_witness(omega: np.ndarray) -> None:
    print("witness normalized precision matrix:")
    for row in omega:
        print("  [" + ", ".join(format_float(v) for v in row) + "]")
    vals = symmetric_eigenvalues(omega).eigenvalues
    print("eigenvalues: " + ", ".join(format_float(v) for v in vals))


def cmd_sample(args: argparse.Namespace) -> int:
    if args.num_samples < 1:
        raise CliError("--N must be >= 1", EXIT_BAD_INPUT)
    bn = _load_model(args.model)
    data = sample_data(bn, args.num_samples, args.seed)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(bn.dag.vertex_labels)
    for row in data:
        writer.writerow([format_float(v) for v in row])
    _write_text(args.out, buf.getvalue())
    return EXIT_OK


def _read_data_csv(path: str) -> np.ndarray:
    text = _read_text(path)
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if len(rows) < 2:
        raise CliError(f"{path}: expected a header row and at least one data row",
                       EXIT_BAD_INPUT)
    header, body = rows[0], rows[1:]
    try:
        data = np.array([[float(v) for v in row] for row in body])
    except ValueError as exc:
        raise CliError(f"{path}: non-numeric data value ({exc})", EXIT_BAD_INPUT)
    if data.shape[1] != len(header):
        raise CliError(f"{path}: row width does not match header", EXIT_BAD_INPUT)
    return data


def cmd_estimate(args: argparse.Namespace) -> int:
    data = _read_data_csv(args.data)
    tol = _resolve_tol(args)
    try:
        omega = empirical_normalized_precision(data)
    except SingularCovariance as exc:
        raise CliError(f"cannot estimate precision: {exc}", EXIT_BAD_INPUT)
    report = analyze_omega(omega, tol)
    _write_text(args.out, render_report(report))
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise CliError("--trials must be >= 1", EXIT_BAD_INPUT)
    if args.n < 1:
        raise CliError("--n must be >= 1", EXIT_BAD_INPUT)
    tol = _resolve_tol(args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["seed", "max_indegree", "moral_forest", "lambda1",
                     "symmetry_residual", "theorem1_residual",
                     "lambda_pass", "symmetry_pass"])
    lambda_passes = symmetry_passes = 0
    for trial in range(args.trials):
        trial_seed = args.seed ^ trial
        trial_args = argparse.Namespace(n=args.n, K=args.K, p=args.p, seed=trial_seed)
        bn = _generate(args.kind, trial_args)
        report = analyze_model(bn, tol)
        lambda_passes += report.verdict_lambda.passed
        symmetry_passes += report.verdict_symmetry.passed
        writer.writerow([
            trial_seed,
            report.max_indegree,
            int(report.moral_graph_is_forest),
            format_float(report.lambda1),
            format_float(report.symmetry_residual),
            format_float(max(report.theorem1_precision_residual,
                             report.theorem1_omega_residual)),
            int(report.verdict_lambda.passed),
            int(report.verdict_symmetry.passed),
        ])
    writer.writerow(["summary", "", "",
                     format_float(lambda_passes / args.trials),
                     format_float(symmetry_passes / args.trials),
                     "", lambda_passes, symmetry_passes])
    _write_text(args.out, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bnspect",
                                 description="Spectral tree tests for linear Bayesian networks")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, tol: bool = True) -> None:
        if tol:
            p.add_argument("--tol", type=float, default=None,
                           help="verdict tolerance (default: BNSPECT_TOL or 1e-8)")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("gen", help="generate a random model file")
    p.add_argument("kind", choices=["forest", "bounded", "erdos"])
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--K", type=int, default=None, help="max indegree (bounded)")
    p.add_argument("--p", type=float, default=None, help="edge probability (erdos)")
    p.add_argument("--seed", type=int, default=0)
    add_common(p, tol=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="full spectral/structural report for a model")
    p.add_argument("model")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check one theorem on a model (exit 3 on counterexample)")
    p.add_argument("model")
    p.add_argument("--theorem", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="draw observations from a model as CSV")
    p.add_argument("model")
    p.add_argument("--N", dest="num_samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    add_common(p, tol=False)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("estimate", help="spectral report from a data CSV")
    p.add_argument("data")
    add_common(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("experiment", help="per-trial statistics over random models")
    p.add_argument("--kind", choices=["forest", "bounded", "erdos"], required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_experiment)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"bnspect: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
