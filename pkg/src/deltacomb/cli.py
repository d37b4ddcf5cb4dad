"""Command-line front end: ``deltacomb {sweep,resonances,table,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from typing import Optional

from . import oracle
from .multinomial import m11_polynomial
from .scatter import PhysicalParams
from .transmission import find_resonances, sweep

SUBCOMMANDS = ("sweep", "resonances", "table", "verify")


@dataclass
class RunConfig:
    subcommand: str
    n: int = 1
    k_lo: float = 0.05
    k_hi: float = 10.0
    steps: int = 2000
    hbar: float = 1.0
    mass: float = 1.0
    lambda_: float = 0.5
    length: float = 1.0
    natural_units: bool = False
    output_path: str = "-"
    seed: int = 0
    tol: Optional[float] = None
    trials: int = 100

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.n < 1:
            raise ValueError(f"--n must be >= 1, got {self.n}")
        if self.natural_units:
            self.hbar, self.mass, self.lambda_ = 1.0, 1.0, 0.5

    def params(self) -> PhysicalParams:
        return PhysicalParams(self.hbar, self.mass, self.lambda_, self.length, self.n)


def fmt(x: float) -> str:
    return format(x, ".12g")


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def run_sweep(cfg: RunConfig) -> str:
    recs = sweep(cfg.n, cfg.k_lo, cfg.k_hi, cfg.steps, cfg.params())
    return _csv(["k", "T", "R"], ((r.k, r.t, r.r) for r in recs))


def run_resonances(cfg: RunConfig) -> str:
    tol = 1e-8 if cfg.tol is None else cfg.tol
    recs = find_resonances(cfg.n, cfg.k_lo, cfg.k_hi, cfg.params(), grid=cfg.steps, tol=tol)
    return _csv(["k_star", "T_peak"], ((r.k_star, r.t_peak) for r in recs))


def run_table(cfg: RunConfig) -> str:
    return "".join(f"{N}: {m11_polynomial(N).format()}\n" for N in range(1, cfg.n + 1))


def run_verify(cfg: RunConfig) -> tuple[str, int]:
    results = oracle.verify(cfg.n, seed=cfg.seed, trials=cfg.trials, tol=cfg.tol)
    lines = [f"verify n={cfg.n} seed={cfg.seed} trials={cfg.trials}"]
    lines += [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append("ALL PASS" if not failed else f"FAILED {failed} of {len(results)} checks")
    return "\n".join(lines) + "\n", 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=1, help="number of deltas")
    common.add_argument("--k-lo", type=float, default=0.05)
    common.add_argument("--k-hi", type=float, default=10.0)
    common.add_argument("--steps", type=int, default=2000, help="grid points (inclusive)")
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--mass", type=float, default=1.0)
    common.add_argument("--lambda", dest="lambda_", type=float, default=0.5,
                        help="delta strength; negative for wells")
    common.add_argument("--length", type=float, default=1.0, help="spacing L")
    common.add_argument("--natural-units", action="store_true",
                        help="hbar = m = 1, lambda = 1/2")
    common.add_argument("--output", default="-", help="output file, '-' for stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None,
                        help="verify: override pass threshold; resonances: bracket width")
    common.add_argument("--trials", type=int, default=100, help="verify: random points per check")

    parser = argparse.ArgumentParser(prog="deltacomb", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("sweep", parents=[common], help="T_N, R_N over a k grid as CSV")
    sub.add_parser("resonances", parents=[common], help="local maxima of T_N as CSV")
    sub.add_parser("table", parents=[common], help="closed-form M11 for N = 1..n")
    sub.add_parser("verify", parents=[common], help="run the oracle checks")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            subcommand=args.subcommand, n=args.n, k_lo=args.k_lo, k_hi=args.k_hi,
            steps=args.steps, hbar=args.hbar, mass=args.mass, lambda_=args.lambda_,
            length=args.length, natural_units=args.natural_units,
            output_path=args.output, seed=args.seed, tol=args.tol, trials=args.trials,
        )
        status = 0
        if cfg.subcommand == "sweep":
            text = run_sweep(cfg)
        elif cfg.subcommand == "resonances":
            text = run_resonances(cfg)
        elif cfg.subcommand == "table":
            text = run_table(cfg)
        else:
            text, status = run_verify(cfg)
    except ValueError as exc:
        print(f"deltacomb: error: {exc}", file=sys.stderr)
        return 2

    if cfg.output_path == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.output_path, "w", newline="\n") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
