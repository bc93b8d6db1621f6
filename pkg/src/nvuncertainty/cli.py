"""Command-line front end: CSV parameter sweeps, the protocol Monte Carlo,
and the randomized invariant suite.

Exit codes: 0 on success, 1 when an invariant check fails, 2 on usage or
I/O errors. CSV files are UTF-8 with LF line endings and are written to a
temporary file first, so a failed run never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from collections.abc import Iterable, Sequence

import numpy as np

from . import __version__
from .checks import run_invariant_checks
from .entropic import PAULI_X, PAULI_Z, uncertainty_report
from .entwit import concurrence, witness
from .nvsim import DephasingModel, KappaEstimate, dephase, estimate_me, run_protocol
from .states import random_mixed, schmidt_state, werner_state


def _fmt(x: float) -> str:
    return f"{x:.12e}"


def _write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    path = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".csv.tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(",".join(header) + "\n")
            for row in rows:
                f.write(",".join(row) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_state_spec(spec: str) -> np.ndarray:
    """Build a state from `schmidt:<chi>`, `werner:<q>`, or `random:<seed>`."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"state spec {spec!r} is missing ':'")
    try:
        if kind == "schmidt":
            return schmidt_state(float(arg))
        if kind == "werner":
            return werner_state(float(arg))
        if kind == "random":
            return random_mixed(int(arg))
    except ValueError as exc:
        raise ValueError(f"bad state spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown state family {kind!r} (use schmidt, werner, or random)")


def cmd_schmidt_sweep(args: argparse.Namespace) -> int:
    grid = np.linspace(0.0, np.pi / 2, args.points)
    rows = []
    for chi in grid:
        rho = schmidt_state(chi)
        rep = uncertainty_report(rho)
        rows.append([_fmt(chi), _fmt(rep.uncertainty), _fmt(rep.lower_bound),
                     _fmt(rep.measurement_estimate), _fmt(concurrence(rho))])
    _write_csv(args.out, ["chi", "U", "Ub", "ME", "C"], rows)
    return 0


def cmd_witness_sweep(args: argparse.Namespace) -> int:
    grid = np.linspace(0.0, 1.0, args.points)
    rows = []
    for q in grid:
        rho = werner_state(q)
        rep = uncertainty_report(rho)
        verdict = witness(rep)
        rows.append([_fmt(q), _fmt(rep.uncertainty), _fmt(rep.lower_bound),
                     _fmt(rep.measurement_estimate), _fmt(concurrence(rho)),
                     "true" if verdict.entangled_certified else "false"])
    _write_csv(args.out, ["q", "U", "Ub", "ME", "C", "certified"], rows)
    return 0


def cmd_dephase(args: argparse.Namespace) -> int:
    if args.t2e <= 0.0:
        print("error: --t2e must be positive", file=sys.stderr)
        return 2
    bell = schmidt_state(np.pi / 4)
    grid = np.linspace(0.0, 10.0 * args.t2e, args.points)
    rows = []
    for t in grid:
        rho = dephase(bell, DephasingModel(t2e=args.t2e, t=t))
        rows.append([_fmt(t), _fmt(uncertainty_report(rho).uncertainty)])
    _write_csv(args.out, ["t", "U"], rows)
    return 0


def cmd_protocol(args: argparse.Namespace) -> int:
    if args.shots < 1:
        print("error: --shots must be at least 1", file=sys.stderr)
        return 2
    try:
        rho = parse_state_spec(args.state)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    counts = {}
    for name, basis, offset in (("sigma1", PAULI_X, 0), ("sigma3", PAULI_Z, 1)):
        table = run_protocol(rho, basis, args.shots, args.seed + offset)
        counts[name] = table
        est = KappaEstimate.from_counts(table)
        print(f"{name} counts: n00={table.n00} n01={table.n01} "
              f"n10={table.n10} n11={table.n11} (shots={table.shots})")
        print(f"{name} kappa: {est.kappa:.6f} +/- {est.std_err:.6f}")

    rep = uncertainty_report(rho)
    print(f"ME estimate:  {estimate_me(counts['sigma1'], counts['sigma3']):.6f}")
    print(f"ME analytic:  {rep.measurement_estimate:.6f}")
    print(f"U analytic:   {rep.uncertainty:.6f}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 2
    results = run_invariant_checks(args.trials, args.seed)
    failed = False
    for r in results:
        status = "pass" if r.passed else "FAIL"
        line = (f"{r.name}: samples={r.samples} "
                f"max_violation={max(r.max_excess, 0.0):.3e} [{status}]")
        if not r.passed:
            failed = True
            line += f" seed={r.worst_seed} state={r.worst_fingerprint}"
        print(line)
    print("result: " + ("FAIL" if failed else "all invariants passed"))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nvuncertainty",
        description="Entropic uncertainty with a nuclear-spin quantum memory: "
                    "sweeps, protocol Monte Carlo, and invariant checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schmidt-sweep",
                       help="uncertainty, bound, estimate, and concurrence over the Schmidt family")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_schmidt_sweep)

    p = sub.add_parser("witness-sweep",
                       help="entanglement witness over the isotropic-mixture family")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_witness_sweep)

    p = sub.add_parser("dephase",
                       help="uncertainty of the dephased Bell state versus time")
    p.add_argument("--t2e", type=float, required=True, help="electron coherence time in seconds")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dephase)

    p = sub.add_parser("protocol",
                       help="paired-readout Monte Carlo for one state "
                            "(schmidt:<chi> | werner:<q> | random:<seed>)")
    p.add_argument("state")
    p.add_argument("--shots", type=int, default=100000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_protocol)

    p = sub.add_parser("check", help="randomized invariant suite")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "points") and args.points < 2:
        print("error: --points must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
