"""Command-line front end: verification suites, theta sweeps, chain spectra.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage/config error.
Reports are byte-stable for a fixed (suite, samples, seed, tol, version).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .dynamics import berry_phase, circle_distance
from .entangle import sweep_extrema
from .errors import YbxError
from .suites import SUITES, chain_summary, run_suite

RNG_NAME = "numpy-default_rng-PCG64"

SWEEP_TARGETS = {
    "entropy-9x9": ("entropy", "psi-qutrit"),
    "l1-9x9": ("l1", "psi-qutrit"),
    "l1-dhalf": ("l1", "dhalf-column"),
    "concurrence-4x4": ("concurrence", "r4-column"),
    "berry": None,
}


def _report(suite: str, seed: int, tol: float, checks: list[dict]) -> dict:
    plain = [c for c in checks if c["params"].get("control") != "negative"]
    max_residual = max((c["residual"] for c in plain), default=0.0)
    return {
        "suite": suite,
        "seed": seed,
        "tolerance": tol,
        "rng": RNG_NAME,
        "version": __version__,
        "checks": checks,
        "summary": {
            "max_residual": max_residual,
            "passed": all(c["passed"] for c in checks),
        },
    }


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.time()
    checks = run_suite(args.suite, args.samples, args.seed, args.tol)
    report = _report(args.suite, args.seed, args.tol, checks)
    payload = json.dumps(report, indent=2) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(payload)
    print(
        f"{args.suite}: {sum(c['passed'] for c in checks)}/{len(checks)} checks passed "
        f"in {time.time() - started:.2f}s",
        file=sys.stderr,
    )
    return 0 if report["summary"]["passed"] else 1


def _berry_rows(grid: int) -> tuple[list[tuple[float, float, float]], float]:
    thetas = np.linspace(0.0, np.pi / 2, grid + 1)[1:]  # theta=0 is degenerate
    rows = []
    worst = 0.0
    for theta in thetas:
        res = berry_phase(theta, n_steps=100_000)
        rows.append((float(theta), res.gamma_plus, res.analytic_plus))
        worst = max(worst, res.abs_error)
    return rows, worst


def cmd_sweep(args: argparse.Namespace) -> int:
    target = SWEEP_TARGETS[args.target]
    stream = sys.stdout
    fh = None
    if args.out:
        try:
            fh = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
        stream = fh
    try:
        if args.target == "berry":
            rows, worst = _berry_rows(args.grid)
            stream.write("theta,value,analytic\n")
            for theta, value, analytic in rows:
                stream.write(f"{theta!r},{value!r},{analytic!r}\n")
            print(f"berry: {len(rows)} points, max circle-distance error {worst:.3e}",
                  file=sys.stderr)
        else:
            functional, model = target
            result = sweep_extrema(functional, model, args.grid)
            result.write_csv(stream)
            print(
                f"{args.target}: argmax theta = {result.argmax_theta:.9f} "
                f"(grid step {result.grid_step:.3e}), max = {result.max_value:.12f}",
                file=sys.stderr,
            )
    finally:
        if fh is not None:
            fh.close()
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    try:
        summary = chain_summary(args.model, args.n, args.t1, args.t2)
    except YbxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"model          {summary['model']}")
    print(f"sites          {summary['n_sites']}  (dimension {summary['dimension']})")
    print(f"ground energy  {summary['ground_energy']:.12f}")
    print(f"degeneracy     {summary['degeneracy']}")
    print(f"gap            {summary['gap']:.12f}")
    if "ground_parities" in summary:
        print(f"parities       {' '.join(summary['ground_parities'])}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybx",
        description="Braid/R-matrix families: relation verification, sweeps, chain spectra.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument("--out", help="write the JSON report here instead of stdout")
    p_verify.set_defaults(fn=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="write a theta sweep as CSV")
    p_sweep.add_argument("target", choices=sorted(SWEEP_TARGETS))
    p_sweep.add_argument("--grid", type=int, default=3001)
    p_sweep.add_argument("--out", help="CSV output path (default: stdout)")
    p_sweep.set_defaults(fn=cmd_sweep)

    p_chain = sub.add_parser("chain", help="diagonalize a chain and print ground-state data")
    p_chain.add_argument("model", choices=("kitaev", "z3"))
    p_chain.add_argument("--n", type=int, required=True)
    p_chain.add_argument("--t1", type=float, default=1.0)
    p_chain.add_argument("--t2", type=float, default=1.0)
    p_chain.set_defaults(fn=cmd_chain)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep" and args.grid < 16:
        print("error: --grid must be at least 16", file=sys.stderr)
        return 2
    if args.command == "verify" and args.samples < 1:
        print("error: --samples must be positive", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except YbxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
