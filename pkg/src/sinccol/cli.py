"""Command line front end: eigenvalue tables, wavefunction samples, convergence runs.

Output is deterministic: 8 significant digits, '.' decimal separator,
'\\n' line endings.  Exit status is 0 on success, 2 on usage errors and
1 on computation errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .coulomb import (
    DEFAULT_BETA,
    DEFAULT_D,
    DEFAULT_M,
    LEVEL_SHIFT,
    eigen_table,
    evaluate_radial,
    solve_states,
)
from .dense_eig import EigenSolveError

__all__ = ["RunConfig", "main"]

USAGE_ERROR = 2
COMPUTE_ERROR = 1


@dataclass
class RunConfig:
    """Validated settings for one CLI invocation."""

    command: str
    l_values: list[int] = field(default_factory=lambda: [0])
    n: int = 0
    count: int = 5
    M: int = DEFAULT_M
    M_list: list[int] = field(default_factory=list)
    d: float = DEFAULT_D
    beta: float = DEFAULT_BETA
    lambda_prime: bool = False
    x_min: float = 0.05
    x_max: float = 10.0
    samples: int = 200
    format: str = "csv"
    output: str | None = None


def _fmt(v: float) -> str:
    return f"{v:#.8g}"


def _emit(header: list[str], rows: list[list[str]], fmt: str, output: str | None) -> None:
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
    else:
        widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
                  for i in range(len(header))]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    text = "\n".join(lines) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _int_list(raw: str) -> list[int]:
    return [int(tok) for tok in raw.split(",") if tok != ""]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sinccol",
        description="Sinc collocation solver for the logarithmic Coulomb spectrum on (0, inf).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--d", type=float, default=DEFAULT_D,
                       help="strip half-width (default pi/4)")
        p.add_argument("--beta", type=float, default=DEFAULT_BETA,
                       help="decay exponent in [0.5, 1] (default 1)")
        p.add_argument("--format", choices=("csv", "table"), default="csv")
        p.add_argument("--output", default=None, help="output file (default stdout)")

    p_eig = sub.add_parser("eigen", help="emit an eigenvalue grid over (n, l)")
    p_eig.add_argument("--l", default="0", help="angular momentum, int or comma list")
    p_eig.add_argument("--count", type=int, default=5, help="number of levels per l")
    p_eig.add_argument("--M", type=int, default=DEFAULT_M)
    p_eig.add_argument("--lambda-prime", action="store_true", dest="lambda_prime",
                       help="also emit the shifted eigenvalue column")
    common(p_eig)

    p_wf = sub.add_parser("wavefunction", help="emit (x, R) samples of a normalized state")
    p_wf.add_argument("--l", type=int, default=0)
    p_wf.add_argument("--n", type=int, default=0, help="radial index, 0 = ground state")
    p_wf.add_argument("--M", type=int, default=DEFAULT_M)
    p_wf.add_argument("--x-min", type=float, default=0.05, dest="x_min")
    p_wf.add_argument("--x-max", type=float, default=10.0, dest="x_max")
    p_wf.add_argument("--samples", type=int, default=200,
                      help="log-spaced sample count over [x-min, x-max]")
    common(p_wf)

    p_cv = sub.add_parser("converge", help="track one eigenvalue over a list of M")
    p_cv.add_argument("--l", type=int, default=0)
    p_cv.add_argument("--n", type=int, default=0)
    p_cv.add_argument("--M", default="", help="comma list of M values, strictly increasing")
    common(p_cv)
    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, d=args.d, beta=args.beta,
                    format=args.format, output=args.output)
    if not 0 < cfg.d <= math.pi / 2:
        parser.error(f"--d must lie in (0, pi/2], got {cfg.d}")
    if not 0.5 <= cfg.beta <= 1.0:
        parser.error(f"--beta must lie in [0.5, 1], got {cfg.beta}")

    if args.command == "eigen":
        try:
            cfg.l_values = _int_list(args.l)
        except ValueError:
            parser.error(f"--l must be an integer or comma list, got {args.l!r}")
        if not cfg.l_values or any(l < 0 for l in cfg.l_values):
            parser.error("--l values must be nonnegative integers")
        cfg.count, cfg.M, cfg.lambda_prime = args.count, args.M, args.lambda_prime
        if cfg.count < 1:
            parser.error("--count must be >= 1")
        if cfg.M < 1:
            parser.error("--M must be >= 1")
    elif args.command == "wavefunction":
        cfg.l_values, cfg.n, cfg.M = [args.l], args.n, args.M
        cfg.x_min, cfg.x_max, cfg.samples = args.x_min, args.x_max, args.samples
        if args.l < 0 or cfg.n < 0:
            parser.error("--l and --n must be nonnegative")
        if cfg.M < 1:
            parser.error("--M must be >= 1")
        if not 0 < cfg.x_min < cfg.x_max:
            parser.error("require 0 < x-min < x-max")
        if cfg.samples < 1:
            parser.error("--samples must be >= 1")
    else:
        cfg.l_values, cfg.n = [args.l], args.n
        if args.l < 0 or cfg.n < 0:
            parser.error("--l and --n must be nonnegative")
        try:
            cfg.M_list = _int_list(args.M)
        except ValueError:
            parser.error(f"--M must be a comma list of integers, got {args.M!r}")
        if len(cfg.M_list) < 2:
            parser.error("--M needs at least two values for a convergence run")
        if any(b <= a for a, b in zip(cfg.M_list, cfg.M_list[1:])) or cfg.M_list[0] < 1:
            parser.error("--M values must be strictly increasing positive integers")
    return cfg


def _cmd_eigen(cfg: RunConfig) -> None:
    table = eigen_table(cfg.l_values, cfg.count, beta=cfg.beta, d=cfg.d, M=cfg.M)
    header = ["n", "l", "lambda"] + (["lambda_prime"] if cfg.lambda_prime else [])
    rows = []
    for j, l in enumerate(cfg.l_values):
        for n in range(cfg.count):
            lam = table[n, j]
            row = [str(n), str(l), _fmt(lam)]
            if cfg.lambda_prime:
                row.append(_fmt(lam + LEVEL_SHIFT))
            rows.append(row)
    _emit(header, rows, cfg.format, cfg.output)


def _cmd_wavefunction(cfg: RunConfig) -> None:
    states = solve_states(cfg.l_values[0], cfg.n + 1, beta=cfg.beta, d=cfg.d, M=cfg.M)
    state = states[cfg.n]
    xs = np.geomspace(cfg.x_min, cfg.x_max, cfg.samples)
    values = np.atleast_1d(evaluate_radial(state, xs))
    rows = [[_fmt(x), _fmt(r)] for x, r in zip(xs, values)]
    _emit(["x", "R"], rows, cfg.format, cfg.output)


def _cmd_converge(cfg: RunConfig) -> None:
    rows = []
    previous = None
    for M in cfg.M_list:
        lam = eigen_table(cfg.l_values, cfg.n + 1, beta=cfg.beta, d=cfg.d, M=M)[cfg.n, 0]
        delta = "" if previous is None else _fmt(abs(lam - previous))
        rows.append([str(M), _fmt(lam), delta])
        previous = lam
    _emit(["M", "lambda", "delta"], rows, cfg.format, cfg.output)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(parser, args)
    try:
        if cfg.command == "eigen":
            _cmd_eigen(cfg)
        elif cfg.command == "wavefunction":
            _cmd_wavefunction(cfg)
        else:
            _cmd_converge(cfg)
    except (EigenSolveError, ValueError, ArithmeticError) as exc:
        print(f"sinccol: error: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
